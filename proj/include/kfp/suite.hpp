#pragma once

#include <functional>
#include <string>
#include <vector>

#include "kfp/poset.hpp"

namespace kfp {

// Centralizes every bound named by the property blocks. "default" matches
// the stated bounds of the acceptance checks; "tiny" shrinks them for quick
// runs; "thorough" widens the enumerations that default keeps small.
struct SizeProfile {
  std::string name = "default";

  // trees
  int tree_vertices = 6;
  int tree_labels = 2;
  int tree_branch = 3;
  int tree_law_vertices = 5;
  int gadget_heights = 3;
  int gadget_labels = 4;

  // orders
  int canon_size = 5;
  int morphism_size = 4;
  int higman_len = 4;
  int higman_base = 3;
  int ord_entry = 3;
  int ord_len = 3;

  // dilators
  int host_size = 3;
  int func_size = 3;
  int action_cap = 3;
  int table_cap = 4;
  int transitivity_cap = 4;
  int embedding_cap = 3;
  int monotone_domain_cap = 3;
  int monotone_codomain_cap = 4;

  // fixed points and bridges
  int term_height = 3;
  int term_count = 4000;
  int wz_height = 3;
  int unary_height = 4;
  int tree_fix_vertices = 5;
  int delabel_vertices = 4;

  // falsification
  int antichain_max = 6;
  int ladder_k = 5;

  static SizeProfile named(const std::string& name);  // tiny | default | thorough
};

// Test seams for the mutation smoke check; empty means the real functions.
struct SuiteHooks {
  std::function<bool(const std::vector<int>&, const std::vector<int>&, const FinPoset&)> higman;
};

struct InvariantResult {
  std::string name;
  std::string bound;
  bool pass = false;
  std::string details;
  double seconds = 0;
};

const std::vector<std::string>& invariant_names();
InvariantResult run_invariant(const std::string& name, const SizeProfile& profile,
                              const SuiteHooks& hooks = {});
std::vector<InvariantResult> run_suite(const SizeProfile& profile, const SuiteHooks& hooks = {});

// The acceptance subset, in criterion order.
const std::vector<std::string>& acceptance_invariants();

}  // namespace kfp
