#include "rab/words.hpp"

#include <queue>
#include <sstream>

#include "rab/error.hpp"

namespace rab {

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (const auto& l : w) {
    h ^= static_cast<std::size_t>(l.type * 131 + l.color);
    h *= 1099511628211ULL;
  }
  return h;
}

GraphProduct::GraphProduct(Diagram d, std::vector<int> q) : d_(std::move(d)), q_(std::move(q)) {
  if (static_cast<int>(q_.size()) != d_.rank()) fail("SchemaError", "q: one parameter per type is required");
  for (Type i = 0; i < rank(); ++i)
    if (q_[i] < 2) fail("SchemaError", "q: parameter of type " + d_.label(i) + " must be at least 2");
}

bool GraphProduct::thick() const {
  for (int v : q_)
    if (v < 3) return false;
  return true;
}

void GraphProduct::validate(const Word& w) const {
  for (const auto& l : w) {
    if (l.type < 0 || l.type >= rank()) fail("UnknownType", "letter type index " + std::to_string(l.type));
    if (l.color < 1 || l.color >= q_[l.type])
      fail("ColorOutOfRange", "color " + std::to_string(l.color) + " for type " + d_.label(l.type));
  }
}

void GraphProduct::push_reduced(Word& w, Letter x) const {
  for (std::size_t k = w.size(); k-- > 0;) {
    Type t = w[k].type;
    if (t == x.type) {
      int c = (w[k].color + x.color) % q_[t];
      if (c)
        w[k].color = c;
      else
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(k));
      return;
    }
    if (d_.infinite(t, x.type)) break;
  }
  w.push_back(x);
}

Word GraphProduct::shortlex(const Word& w) const {
  // Lexicographically least linear extension of the dependence order. Only
  // the latest earlier letter of each non-commuting type is a needed edge.
  const int n = static_cast<int>(w.size());
  std::vector<std::vector<int>> succ(n);
  std::vector<int> indeg(n, 0);
  std::vector<int> last(rank(), -1);
  for (int p = 0; p < n; ++p) {
    for (Type u : members(d_.blockers(w[p].type))) {
      int r = last[u];
      if (r >= 0) {
        succ[r].push_back(p);
        ++indeg[p];
      }
    }
    last[w[p].type] = p;
  }
  using Key = std::pair<Type, int>;
  std::priority_queue<Key, std::vector<Key>, std::greater<>> ready;
  for (int p = 0; p < n; ++p)
    if (indeg[p] == 0) ready.emplace(w[p].type, p);
  Word out;
  out.reserve(n);
  while (!ready.empty()) {
    int p = ready.top().second;
    ready.pop();
    out.push_back(w[p]);
    for (int s : succ[p])
      if (--indeg[s] == 0) ready.emplace(w[s].type, s);
  }
  return out;
}

Word GraphProduct::normalize(const Word& w) const {
  validate(w);
  Word r;
  r.reserve(w.size());
  for (const auto& l : w) push_reduced(r, l);
  return shortlex(r);
}

Word GraphProduct::multiply(const Word& u, const Word& v) const {
  validate(u);
  validate(v);
  Word r = u;
  for (const auto& l : v) push_reduced(r, l);
  return shortlex(r);
}

Word GraphProduct::invert(const Word& u) const {
  validate(u);
  Word r;
  for (auto it = u.rbegin(); it != u.rend(); ++it) push_reduced(r, {it->type, q_[it->type] - it->color});
  return shortlex(r);
}

Word GraphProduct::times(const Word& u, Type type, int color) const {
  color %= q_[type];
  if (color < 0) color += q_[type];
  if (color == 0) return u;
  Word r = u;
  push_reduced(r, {type, color});
  return shortlex(r);
}

std::pair<Word, Word> GraphProduct::split(const Word& u, TypeSet J, Side side) const {
  if (J & ~d_.all()) fail("UnknownType", "split set contains undeclared types");
  const int n = static_cast<int>(u.size());
  std::vector<char> taken(n, 0);
  TypeSet stay = 0;  // types blocked by letters that remain in place
  auto visit = [&](int k) {
    Type t = u[k].type;
    if (has(J, t) && !has(stay, t))
      taken[k] = 1;
    else
      stay |= d_.blockers(t);
  };
  if (side == Side::Suffix)
    for (int k = n - 1; k >= 0; --k) visit(k);
  else
    for (int k = 0; k < n; ++k) visit(k);
  Word rest, part;
  for (int k = 0; k < n; ++k) (taken[k] ? part : rest).push_back(u[k]);
  if (side == Side::Suffix) return {shortlex(rest), shortlex(part)};
  return {shortlex(part), shortlex(rest)};
}

std::vector<int> GraphProduct::lambda(const Word& c) const {
  std::vector<int> out(rank(), 0);
  for (const auto& l : c) out[l.type] = (out[l.type] + l.color) % q_[l.type];
  return out;
}

int GraphProduct::dist(const Word& c, const Word& e) const {
  Word r;
  for (auto it = c.rbegin(); it != c.rend(); ++it) push_reduced(r, {it->type, q_[it->type] - it->color});
  for (const auto& l : e) push_reduced(r, l);
  return static_cast<int>(r.size());
}

WeylWord weyl(const Word& u) {
  WeylWord w;
  for (const auto& l : u) w.types.push_back(l.type);
  w.length = static_cast<int>(u.size());
  return w;
}

int i_count(const Word& u, Type i) {
  int n = 0;
  for (const auto& l : u) n += l.type == i;
  return n;
}

int length(const Word& u) { return static_cast<int>(u.size()); }

std::string to_string(const Word& w, const Diagram& d) {
  std::ostringstream os;
  os << '[';
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) os << ',';
    os << '(' << d.label(w[k].type) << ',' << w[k].color << ')';
  }
  os << ']';
  return os.str();
}

}  // namespace rab
