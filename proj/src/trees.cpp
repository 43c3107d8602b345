#include "kfp/trees.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <unordered_map>

namespace kfp {

int LabeledTree::vertex_count() const {
  int n = 1;
  for (const auto& c : children) n += c.vertex_count();
  return n;
}

int LabeledTree::height() const {
  int h = 0;
  for (const auto& c : children) h = std::max(h, 1 + c.height());
  return h;
}

int LabeledTree::max_branching() const {
  int b = static_cast<int>(children.size());
  for (const auto& c : children) b = std::max(b, c.max_branching());
  return b;
}

int LabeledTree::max_label() const {
  int l = label;
  for (const auto& c : children) l = std::max(l, c.max_label());
  return l;
}

bool LabeledTree::operator==(const LabeledTree& o) const {
  return label == o.label && children == o.children;
}

bool tree_in_universe(const LabeledTree& t, int label_bound, int branch_bound) {
  if (t.label < 0 || t.label >= label_bound) return false;
  if (branch_bound > 0 && static_cast<int>(t.children.size()) >= branch_bound) return false;
  for (const auto& c : t.children)
    if (!tree_in_universe(c, label_bound, branch_bound)) return false;
  return true;
}

namespace {

// Memoized on subtree addresses, which are stable for the duration of a call.
class EmbedCheck {
 public:
  bool leq(const LabeledTree& s, const LabeledTree& t) {
    auto key = std::make_pair(&s, &t);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    bool result = false;
    if (s.label == t.label && star_leq(s.children, t.children)) result = true;
    if (!result)
      for (const auto& c : t.children)
        if (leq(s, c)) {
          result = true;
          break;
        }
    memo_.emplace(key, result);
    return result;
  }

 private:
  bool star_leq(const std::vector<LabeledTree>& a, const std::vector<LabeledTree>& b) {
    size_t ja = a.size(), jb = b.size();
    if (ja > jb) return false;
    std::vector<std::vector<char>> can(ja + 1, std::vector<char>(jb + 1, 0));
    for (size_t j = 0; j <= jb; ++j) can[ja][j] = 1;
    for (size_t i = ja; i-- > 0;)
      for (size_t j = jb; j-- > 0;)
        can[i][j] = (leq(a[i], b[j]) && can[i + 1][j + 1]) || can[i][j + 1];
    return can[0][0];
  }

  struct Hash {
    size_t operator()(const std::pair<const LabeledTree*, const LabeledTree*>& p) const {
      return std::hash<const void*>()(p.first) * 1000003u ^ std::hash<const void*>()(p.second);
    }
  };
  std::unordered_map<std::pair<const LabeledTree*, const LabeledTree*>, bool, Hash> memo_;
};

}  // namespace

bool tree_leq(const LabeledTree& s, const LabeledTree& t) {
  EmbedCheck check;
  return check.leq(s, t);
}

// ---- brute-force oracle ----------------------------------------------------

namespace {

struct FlatTree {
  std::vector<int> label, parent, pre, depth;
  std::vector<std::vector<char>> anc;  // anc[u][v]: u is a (non-strict) ancestor of v
  std::vector<std::vector<int>> lca;

  explicit FlatTree(const LabeledTree& t) {
    build(t, -1, 0);
    int n = static_cast<int>(label.size());
    anc.assign(n, std::vector<char>(n, 0));
    for (int v = 0; v < n; ++v) {
      int u = v;
      while (u >= 0) {
        anc[u][v] = 1;
        u = parent[u];
      }
    }
    lca.assign(n, std::vector<int>(n, 0));
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        int a = u;
        while (!anc[a][v]) a = parent[a];
        lca[u][v] = a;
      }
  }

  int size() const { return static_cast<int>(label.size()); }

 private:
  int build(const LabeledTree& t, int par, int dep) {
    int id = static_cast<int>(label.size());
    label.push_back(t.label);
    parent.push_back(par);
    pre.push_back(id);
    depth.push_back(dep);
    for (const auto& c : t.children) build(c, id, dep + 1);
    return id;
  }
};

// Assign s-vertices in preorder; images must grow in preorder, respect labels,
// mirror ancestry both ways and map lowest common ancestors on the nose.
bool oracle_search(const FlatTree& fs, const FlatTree& ft, std::vector<int>& img, int v) {
  if (v == fs.size()) return true;
  int lo = v == 0 ? 0 : img[v - 1] + 1;
  for (int w = lo; w < ft.size(); ++w) {
    if (ft.label[w] != fs.label[v]) continue;
    bool ok = true;
    for (int u = 0; u < v && ok; ++u) {
      if (fs.anc[u][v] != ft.anc[img[u]][w]) ok = false;
      if (ok && ft.anc[w][img[u]]) ok = false;  // v precedes u in preorder, so must w
      if (ok && img[fs.lca[u][v]] != ft.lca[img[u]][w]) ok = false;
    }
    if (!ok) continue;
    img[v] = w;
    if (oracle_search(fs, ft, img, v + 1)) return true;
  }
  return false;
}

}  // namespace

bool tree_leq_oracle(const LabeledTree& s, const LabeledTree& t, int vertex_cap) {
  if (s.vertex_count() > vertex_cap || t.vertex_count() > vertex_cap)
    throw ResourceError("tree_leq_oracle: vertex bound exceeded");
  FlatTree fs(s), ft(t);
  if (fs.size() > ft.size()) return false;
  if (s.height() > t.height()) return false;
  std::map<int, int> need;
  for (int l : fs.label) ++need[l];
  std::map<int, int> have;
  for (int l : ft.label) ++have[l];
  for (auto [l, c] : need)
    if (have[l] < c) return false;
  std::vector<int> img(fs.size(), -1);
  return oracle_search(fs, ft, img, 0);
}

LabeledTree full_tree(int k, int j) {
  if (k < 1 || j < 0) throw OrderError("full_tree: need k >= 1, j >= 0");
  LabeledTree t;
  t.label = 0;
  if (j > 0) t.children.assign(k, full_tree(k, j - 1));
  return t;
}

LabeledTree label_gadget(int m, int l) {
  if (l < 0 || l >= m) throw OrderError("label_gadget: need l < m");
  return full_tree(l + 1, m - l);
}

std::string tree_to_string(const LabeledTree& t) {
  std::string out = std::to_string(t.label) + "*(";
  for (size_t i = 0; i < t.children.size(); ++i) {
    if (i) out += " ";
    out += tree_to_string(t.children[i]);
  }
  out += ")";
  return out;
}

namespace {

void skip_ws(const std::string& s, size_t& pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

LabeledTree parse_tree(const std::string& s, size_t& pos) {
  skip_ws(s, pos);
  size_t start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (start == pos) throw ParseError("tree: expected a label");
  LabeledTree t;
  t.label = std::stoi(s.substr(start, pos - start));
  if (pos + 1 >= s.size() || s[pos] != '*' || s[pos + 1] != '(')
    throw ParseError("tree: expected \"*(\"");
  pos += 2;
  while (true) {
    skip_ws(s, pos);
    if (pos >= s.size()) throw ParseError("tree: unterminated \"(\"");
    if (s[pos] == ')') {
      ++pos;
      break;
    }
    t.children.push_back(parse_tree(s, pos));
  }
  return t;
}

}  // namespace

LabeledTree tree_parse(const std::string& text) {
  size_t pos = 0;
  LabeledTree t = parse_tree(text, pos);
  skip_ws(text, pos);
  if (pos != text.size()) throw ParseError("tree: trailing input");
  return t;
}

std::vector<LabeledTree> enumerate_trees(int label_bound, int branch_bound, int max_vertices) {
  // by_size[v] lists all trees with exactly v vertices
  std::vector<std::vector<LabeledTree>> by_size(max_vertices + 1);
  for (int v = 1; v <= max_vertices; ++v) {
    // child forests with total size v-1 and < branch_bound children
    std::vector<std::vector<LabeledTree>> acc;
    std::vector<LabeledTree> cur;
    auto rec = [&](auto&& self, int remaining) -> void {
      if (remaining == 0) {
        acc.push_back(cur);
        return;
      }
      if (branch_bound > 0 && static_cast<int>(cur.size()) >= branch_bound - 1) return;
      for (int sz = 1; sz <= remaining; ++sz)
        for (const auto& c : by_size[sz]) {
          cur.push_back(c);
          self(self, remaining - sz);
          cur.pop_back();
        }
    };
    rec(rec, v - 1);
    for (int l = 0; l < label_bound; ++l)
      for (const auto& f : acc) {
        LabeledTree t;
        t.label = l;
        t.children = f;
        by_size[v].push_back(std::move(t));
      }
  }
  std::vector<LabeledTree> out;
  for (int v = 1; v <= max_vertices; ++v) {
    std::sort(by_size[v].begin(), by_size[v].end(),
              [](const LabeledTree& a, const LabeledTree& b) {
                return tree_to_string(a) < tree_to_string(b);
              });
    for (auto& t : by_size[v]) out.push_back(std::move(t));
  }
  return out;
}

}  // namespace kfp
