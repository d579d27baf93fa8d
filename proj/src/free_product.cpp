#include "dgk/free_product.hpp"

#include <sstream>

namespace dgk {

FreeProduct::FreeProduct(FiniteGroupoid h, FiniteGroupoid v) : h_(std::move(h)), v_(std::move(v)) {
  if (h_.object_count() != v_.object_count()) throw BaseMismatch("free product factors have different bases");
}

void FreeProduct::check_chained(const Path& p) const {
  if (p.empty()) throw NotChained("empty path; use a point instead");
  for (std::size_t i = 0; i < p.size(); ++i)
    if (idx(p[i].arrow) >= groupoid(p[i].side).arrow_count())
      throw FormatError("letter " + std::to_string(i), "arrow out of range");
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (tgt(p[i]) != src(p[i + 1]))
      throw NotChained("letters " + std::to_string(i) + " and " + std::to_string(i + 1) + " do not meet");
}

bool FreeProduct::is_reduced(const ReducedWord& w) const {
  if (idx(w.base) >= h_.object_count()) return false;
  ObjectId at = w.base;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    const Letter u = w.letters[i];
    if (idx(u.arrow) >= groupoid(u.side).arrow_count()) return false;
    if (src(u) != at || is_identity(u)) return false;
    if (i > 0 && w.letters[i - 1].side == u.side) return false;
    at = tgt(u);
  }
  return true;
}

ReducedWord FreeProduct::reduce(const Path& p) const {
  check_chained(p);
  std::vector<Letter> st;
  for (Letter u : p) {
    if (is_identity(u)) continue;
    if (!st.empty() && st.back().side == u.side) {
      Letter c{u.side, groupoid(u.side).compose(st.back().arrow, u.arrow)};
      st.pop_back();
      if (!is_identity(c)) st.push_back(c);
    } else {
      st.push_back(u);
    }
  }
  return {src(p.front()), std::move(st)};
}

std::vector<FreeProduct::Redex> FreeProduct::redexes(const Path& p) const {
  std::vector<Redex> out;
  if (p.size() == 1) {
    if (is_identity(p[0])) out.push_back({Redex::Kind::Collapse, 0});
    return out;
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (is_identity(p[i])) out.push_back({Redex::Kind::Drop, i});
    if (i + 1 < p.size() && p[i].side == p[i + 1].side) out.push_back({Redex::Kind::Merge, i});
  }
  return out;
}

ReducedWord FreeProduct::reduce_randomly(const Path& start, std::mt19937_64& rng) const {
  check_chained(start);
  Path p = start;
  const ObjectId base = src(p.front());
  for (;;) {
    const auto rs = redexes(p);
    if (rs.empty()) return {base, std::move(p)};
    const Redex r = rs[std::uniform_int_distribution<std::size_t>(0, rs.size() - 1)(rng)];
    switch (r.kind) {
      case Redex::Kind::Collapse:
        return point(base);
      case Redex::Kind::Drop:
        p.erase(p.begin() + static_cast<std::ptrdiff_t>(r.pos));
        break;
      case Redex::Kind::Merge:
        p[r.pos].arrow = groupoid(p[r.pos].side).compose(p[r.pos].arrow, p[r.pos + 1].arrow);
        p.erase(p.begin() + static_cast<std::ptrdiff_t>(r.pos) + 1);
        break;
    }
  }
}

ReducedWord FreeProduct::concat(const ReducedWord& a, const ReducedWord& b) const {
  if (target(a) != source(b)) throw NotChained("words do not meet");
  if (a.letters.empty()) return b;
  if (b.letters.empty()) return a;
  Path p = a.letters;
  p.insert(p.end(), b.letters.begin(), b.letters.end());
  return reduce(p);
}

ReducedWord FreeProduct::inverse(const ReducedWord& w) const {
  ReducedWord out{target(w), {}};
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out.letters.push_back(inverse(*it));
  return out;
}

ReducedWord box_word(const FreeProduct& fp, const DoubleGroupoid& d, BoxId a) {
  const auto& h = d.horizontal();
  const auto& v = d.vertical();
  return fp.reduce({{Side::H, d.top(a)},
                    {Side::V, d.right(a)},
                    {Side::H, h.inverse(d.bottom(a))},
                    {Side::V, v.inverse(d.left(a))}});
}

std::string to_string(const ReducedWord& w) {
  if (w.letters.empty()) return "[" + std::to_string(idx(w.base)) + "]";
  std::string out;
  for (const Letter& u : w.letters) {
    if (!out.empty()) out += ' ';
    out += u.side == Side::H ? "H:" : "V:";
    out += std::to_string(idx(u.arrow));
  }
  return out;
}

Path parse_path(const std::string& text) {
  std::istringstream in(text);
  std::string tok;
  Path out;
  while (in >> tok) {
    const std::string ctx = "letter " + std::to_string(out.size());
    if (tok.size() < 3 || tok[1] != ':' || (tok[0] != 'H' && tok[0] != 'V'))
      throw FormatError(ctx, "expected TAG:index with TAG H or V, got '" + tok + "'");
    const std::string num = tok.substr(2);
    if (num.find_first_not_of("0123456789") != std::string::npos || num.size() > 9)
      throw FormatError(ctx, "bad arrow index '" + num + "'");
    out.push_back({tok[0] == 'H' ? Side::H : Side::V, make_id<ArrowId>(std::stoul(num))});
  }
  return out;
}

Boundary boundary(const FreeProduct& fp, const ReducedWord& p, const ReducedWord& q) {
  if (p.letters.empty() || q.letters.empty()) throw NotChained("boundary needs nonempty words");
  if (fp.target(p) != fp.source(q)) throw NotChained("words do not meet");
  const Letter pn = p.letters.back(), q1 = q.letters.front();
  if (pn.side != q1.side) return Boundary::DifferentSides;
  if (pn != fp.inverse(q1)) return Boundary::SameSideNotInverse;
  if (p.length() < 2 || q.length() < 2) return Boundary::InverseThenNotInverse;
  const Letter pm = p.letters[p.length() - 2], q2 = q.letters[1];
  return pm == fp.inverse(q2) ? Boundary::InverseThenInverse : Boundary::InverseThenNotInverse;
}

std::optional<std::size_t> stated_length(const FreeProduct& fp, const ReducedWord& p, const ReducedWord& q) {
  const std::size_t n = p.length() + q.length();
  switch (boundary(fp, p, q)) {
    case Boundary::DifferentSides: return n;
    case Boundary::SameSideNotInverse: return n - 1;
    case Boundary::InverseThenNotInverse: return n - 2;
    case Boundary::InverseThenInverse: return std::nullopt;
  }
  return std::nullopt;
}

std::optional<std::size_t> forced_length(const FreeProduct& fp, const ReducedWord& p, const ReducedWord& q) {
  auto s = stated_length(fp, p, q);
  if (s && boundary(fp, p, q) == Boundary::InverseThenNotInverse && p.length() >= 2 && q.length() >= 2)
    return *s - 1;
  return s;
}

std::vector<ReducedWord> all_reduced_words(const FreeProduct& fp, std::size_t max_len) {
  std::vector<ReducedWord> out;
  const std::size_t n = fp.groupoid(Side::H).object_count();
  ReducedWord cur;
  // Extends `cur` by letters out of `at`, avoiding the side of the last letter.
  auto extend = [&](auto&& self, ObjectId at) -> void {
    if (!cur.letters.empty()) out.push_back(cur);
    if (cur.letters.size() == max_len) return;
    for (Side s : {Side::H, Side::V}) {
      if (!cur.letters.empty() && cur.letters.back().side == s) continue;
      for (ArrowId a : fp.groupoid(s).arrows_from(at)) {
        if (fp.groupoid(s).is_identity(a)) continue;
        cur.letters.push_back({s, a});
        self(self, fp.groupoid(s).tgt(a));
        cur.letters.pop_back();
      }
    }
  };
  for (std::size_t p = 0; p < n; ++p) {
    cur = {make_id<ObjectId>(p), {}};
    extend(extend, make_id<ObjectId>(p));
  }
  return out;
}

}  // namespace dgk
