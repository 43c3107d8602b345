#include "kfp/ordterm.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace kfp {

OrdTerm OrdTerm::atom() {
  OrdTerm t;
  t.level_ = 0;
  return t;
}

OrdTerm OrdTerm::nat(int n) {
  if (n < 0) throw OrderError("nat: negative");
  return OrdTerm(1, std::vector<OrdTerm>(n, atom()));
}

OrdTerm OrdTerm::zero(int level) { return OrdTerm(level, {}); }

OrdTerm::OrdTerm(int level, std::vector<OrdTerm> entries) : level_(level), entries_(std::move(entries)) {
  if (level < 1 || level > kMaxLevel) throw OrderError("ord term level out of range");
  for (const OrdTerm& e : entries_)
    if (e.level_ != level - 1) throw OrderError("ord term entry has wrong level");
  for (size_t i = 0; i + 1 < entries_.size(); ++i)
    if (ord_cmp(entries_[i], entries_[i + 1]) < 0)
      throw OrderError("ord term entries must be non-increasing");
}

int OrdTerm::as_nat() const {
  if (level_ != 1) throw OrderError("as_nat: not a level-1 term");
  return static_cast<int>(entries_.size());
}

bool OrdTerm::operator==(const OrdTerm& o) const {
  return level_ == o.level_ && ord_cmp(*this, o) == 0;
}

int ord_cmp(const OrdTerm& s, const OrdTerm& t) {
  if (s.level() != t.level()) throw OrderError("ord_cmp: level mismatch");
  if (s.level() == 0) return 0;
  const auto& a = s.entries();
  const auto& b = t.entries();
  size_t n = std::min(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    int c = ord_cmp(a[i], b[i]);
    if (c != 0) return c;
  }
  if (a.size() == b.size()) return 0;
  return a.size() < b.size() ? -1 : 1;  // proper prefix is smaller
}

bool ord_leq(const OrdTerm& s, const OrdTerm& t) { return ord_cmp(s, t) <= 0; }

std::string ord_to_string(const OrdTerm& t) {
  if (t.level() == 0) return ".";
  if (t.level() == 1) return std::to_string(t.as_nat());
  std::string out = "[";
  for (size_t i = 0; i < t.entries().size(); ++i) {
    if (i) out += " ";
    out += ord_to_string(t.entries()[i]);
  }
  out += "]";
  return out;
}

namespace {

void skip_ws(const std::string& s, size_t& pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

OrdTerm parse_term(const std::string& s, size_t& pos, int level) {
  skip_ws(s, pos);
  if (level == 1) {
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      throw ParseError("ord term: expected a natural number");
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    return OrdTerm::nat(std::stoi(s.substr(start, pos - start)));
  }
  if (pos >= s.size() || s[pos] != '[') throw ParseError("ord term: expected '['");
  ++pos;
  std::vector<OrdTerm> entries;
  while (true) {
    skip_ws(s, pos);
    if (pos >= s.size()) throw ParseError("ord term: unterminated '['");
    if (s[pos] == ']') {
      ++pos;
      break;
    }
    entries.push_back(parse_term(s, pos, level - 1));
  }
  try {
    return OrdTerm(level, std::move(entries));
  } catch (const OrderError& e) {
    throw ParseError(std::string("ord term: ") + e.what());
  }
}

}  // namespace

OrdTerm ord_parse(const std::string& text, int level) {
  size_t pos = 0;
  OrdTerm t = parse_term(text, pos, level);
  skip_ws(text, pos);
  if (pos != text.size()) throw ParseError("ord term: trailing input");
  return t;
}

std::vector<OrdTerm> enumerate_ord_terms(int level, int max_entry, int max_len) {
  if (level == 1) {
    std::vector<OrdTerm> out;
    for (int n = 0; n <= max_len; ++n) out.push_back(OrdTerm::nat(n));
    return out;
  }
  std::vector<OrdTerm> lower =
      level == 2 ? [&] {
        std::vector<OrdTerm> v;
        for (int n = 0; n <= max_entry; ++n) v.push_back(OrdTerm::nat(n));
        return v;
      }()
                 : enumerate_ord_terms(level - 1, max_entry, max_len);
  // lower is sorted ascending; build non-increasing sequences.
  std::vector<OrdTerm> out;
  std::vector<OrdTerm> cur;
  auto rec = [&](auto&& self, int max_index) -> void {
    out.push_back(OrdTerm(level, cur));
    if (static_cast<int>(cur.size()) >= max_len) return;
    for (int i = max_index; i >= 0; --i) {
      cur.push_back(lower[i]);
      self(self, i);
      cur.pop_back();
    }
  };
  rec(rec, static_cast<int>(lower.size()) - 1);
  std::sort(out.begin(), out.end(),
            [](const OrdTerm& a, const OrdTerm& b) { return ord_cmp(a, b) < 0; });
  return out;
}

}  // namespace kfp
