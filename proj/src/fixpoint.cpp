#include "kfp/fixpoint.hpp"

#include <algorithm>
#include <cctype>

namespace kfp {

TermSystem::TermSystem(CodedDilator d) : d_(std::move(d)) {}

bool TermSystem::rank_less(Term a, Term b) const {
  const Node& na = nodes_[a];
  const Node& nb = nodes_[b];
  if (na.height != nb.height) return na.height < nb.height;
  if (na.length != nb.length) return na.length < nb.length;
  return na.serial < nb.serial;
}

TermSystem::Term TermSystem::mk_term(const std::vector<Term>& children, int token) {
  if (token < 0 || token >= static_cast<int>(d_.trace().size()))
    throw OrderError("mk_term: unknown token");
  std::vector<Term> kids = children;
  std::sort(kids.begin(), kids.end());
  kids.erase(std::unique(kids.begin(), kids.end()), kids.end());
  std::sort(kids.begin(), kids.end(), [&](Term a, Term b) { return rank_less(a, b); });

  FinPoset induced = induced_order(kids);
  Canonicalization c = canonical_form(induced);
  if (!(c.canon == d_.token(token).shape))
    throw OrderError("mk_term: children order does not match the shape of token " +
                     d_.token(token).id);

  std::string serial = "(" + d_.token(token).id + ":";
  for (size_t i = 0; i < kids.size(); ++i) {
    if (i) serial += " ";
    serial += nodes_[kids[i]].serial;
  }
  serial += ")";
  auto it = intern_.find(serial);
  if (it != intern_.end()) return it->second;

  Node n;
  n.token = token;
  n.children = kids;
  n.height = 0;
  n.length = 1;
  for (Term k : kids) {
    n.height = std::max(n.height, nodes_[k].height + 1);
    n.length += nodes_[k].length;
  }
  n.serial = serial;
  Term id = static_cast<Term>(nodes_.size());
  nodes_.push_back(std::move(n));
  intern_.emplace(nodes_.back().serial, id);
  return id;
}

FinPoset TermSystem::induced_order(const std::vector<Term>& terms) {
  int n = static_cast<int>(terms.size());
  FinPoset p(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && leq(terms[i], terms[j])) p.set_leq(i, j);
  return p;
}

bool TermSystem::leq(Term s, Term t) {
  if (s == t) return true;
  uint64_t key = (static_cast<uint64_t>(s) << 32) | static_cast<uint32_t>(t);
  auto it = leq_memo_.find(key);
  if (it != leq_memo_.end()) return it->second;

  // second disjunct first: s below some child of t
  bool result = false;
  for (Term c : nodes_[t].children)
    if (leq(s, c)) {
      result = true;
      break;
    }
  if (!result) {
    // the W-comparison over the union of the children sets
    std::vector<Term> u = nodes_[s].children;
    u.insert(u.end(), nodes_[t].children.begin(), nodes_[t].children.end());
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    std::sort(u.begin(), u.end(), [&](Term a, Term b) { return rank_less(a, b); });
    FinPoset host = induced_order(u);
    auto supports = [&](const std::vector<Term>& kids) {
      std::vector<int> out;
      for (Term k : kids)
        out.push_back(static_cast<int>(std::find(u.begin(), u.end(), k) - u.begin()));
      std::sort(out.begin(), out.end());
      return out;
    };
    DilElem xs{supports(nodes_[s].children), nodes_[s].token};
    DilElem yt{supports(nodes_[t].children), nodes_[t].token};
    result = leq_W(d_, host, xs, yt);
  }
  leq_memo_.emplace(key, result);
  return result;
}

namespace {

void skip_ws(const std::string& s, size_t& pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

}  // namespace

TermSystem::Term TermSystem::parse(const std::string& text) {
  size_t pos = 0;
  auto rec = [&](auto&& self) -> Term {
    skip_ws(text, pos);
    if (pos >= text.size() || text[pos] != '(') throw ParseError("term: expected '('");
    ++pos;
    size_t start = pos;
    while (pos < text.size() && text[pos] != ':') ++pos;
    if (pos >= text.size()) throw ParseError("term: expected ':'");
    std::string id = text.substr(start, pos - start);
    ++pos;
    int token = d_.token_index(id);
    if (token < 0) throw ParseError("term: unknown token \"" + id + "\"");
    std::vector<Term> kids;
    while (true) {
      skip_ws(text, pos);
      if (pos >= text.size()) throw ParseError("term: unterminated '('");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      kids.push_back(self(self));
    }
    try {
      return mk_term(kids, token);
    } catch (const OrderError& e) {
      throw ParseError(std::string("term: ") + e.what());
    }
  };
  Term t = rec(rec);
  skip_ws(text, pos);
  if (pos != text.size()) throw ParseError("term: trailing input");
  return t;
}

TermSystem::Enumeration TermSystem::enumerate(int max_height, int max_count) {
  if (max_height < 0 || max_count < 0) throw OrderError("enumerate: bounds must be nonnegative");
  std::vector<Term> acc;
  std::vector<Term> prev_level;
  // height 0: empty-shape tokens
  for (int tok = 0; tok < static_cast<int>(d_.trace().size()); ++tok)
    if (d_.token(tok).shape.size() == 0) prev_level.push_back(mk_term({}, tok));
  acc = prev_level;

  // levels are generated in full so a truncated result is always the
  // rank-least prefix; a combinatorial blowup is an explicit resource error
  long long visit_budget = std::max(2000000LL, 500LL * max_count);
  long long level_budget = std::max(20000LL, 8LL * max_count);

  for (int h = 1; h <= max_height && !prev_level.empty(); ++h) {
    std::vector<Term> level;
    // children subsets of size <= n_max drawn from acc, at least one from the
    // previous level so the height is exactly h
    std::vector<int> idx;
    auto rec = [&](auto&& self, size_t start, bool fresh) -> void {
      if (--visit_budget < 0 || static_cast<long long>(level.size()) > level_budget)
        throw ResourceError("enumerate: level exceeds the work budget");
      if (!idx.empty() && fresh) {
        std::vector<Term> kids;
        for (int i : idx) kids.push_back(acc[i]);
        FinPoset induced = induced_order(kids);
        CanonicalPoset shape = canonical_form(induced).canon;
        for (int tok : d_.tokens_with_shape(shape)) level.push_back(mk_term(kids, tok));
      }
      if (static_cast<int>(idx.size()) >= d_.n_max()) return;
      for (size_t i = start; i < acc.size(); ++i) {
        bool f2 = fresh || nodes_[acc[i]].height == h - 1;
        idx.push_back(static_cast<int>(i));
        self(self, i + 1, f2);
        idx.pop_back();
      }
    };
    rec(rec, 0, false);
    std::sort(level.begin(), level.end());
    level.erase(std::unique(level.begin(), level.end()), level.end());
    acc.insert(acc.end(), level.begin(), level.end());
    prev_level = std::move(level);
  }

  std::sort(acc.begin(), acc.end(), [&](Term a, Term b) { return rank_less(a, b); });
  acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
  Enumeration out;
  if (static_cast<int>(acc.size()) > max_count) {
    acc.resize(max_count);
    out.truncated = true;
  }
  out.terms = std::move(acc);
  return out;
}

}  // namespace kfp
