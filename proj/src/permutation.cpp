#include "actionlab/permutation.hpp"

#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

#include "actionlab/error.hpp"

namespace actionlab {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 0U);
}

Permutation::Permutation(std::vector<unsigned> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (unsigned v : images_) {
    if (v >= images_.size() || seen[v]) fail(ErrorKind::InvalidSpec, "image array is not a permutation");
    seen[v] = 1;
  }
}

Permutation Permutation::parse(std::string_view text, std::size_t degree) {
  Permutation p(degree);
  std::vector<char> used(degree, 0);
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  while (i < text.size()) {
    if (text[i] != '(') fail(ErrorKind::InvalidSpec, "expected '(' in \"" + std::string(text) + "\"");
    ++i;
    std::vector<unsigned> cycle;
    while (true) {
      while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
      if (i >= text.size()) fail(ErrorKind::InvalidSpec, "unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) fail(ErrorKind::InvalidSpec, "bad cycle token");
      unsigned long v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) v = v * 10 + (text[i++] - '0');
      if (v < 1 || v > degree) fail(ErrorKind::InvalidSpec, "point " + std::to_string(v) + " outside 1..degree");
      if (used[v - 1]) fail(ErrorKind::InvalidSpec, "cycles are not disjoint");
      used[v - 1] = 1;
      cycle.push_back(static_cast<unsigned>(v - 1));
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) p.images_[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip();
  }
  return p;
}

bool Permutation::is_identity() const {
  for (unsigned x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return false;
  return true;
}

Permutation Permutation::then(const Permutation& rhs) const {
  std::vector<unsigned> out(images_.size());
  for (unsigned x = 0; x < images_.size(); ++x) out[x] = rhs.images_[images_[x]];
  return Permutation(std::move(out));
}

Permutation Permutation::inverse() const {
  std::vector<unsigned> out(images_.size());
  for (unsigned x = 0; x < images_.size(); ++x) out[images_[x]] = x;
  return Permutation(std::move(out));
}

bool Permutation::is_even() const {
  std::vector<char> seen(images_.size(), 0);
  std::size_t transpositions = 0;
  for (unsigned x = 0; x < images_.size(); ++x) {
    if (seen[x]) continue;
    std::size_t len = 0;
    for (unsigned y = x; !seen[y]; y = images_[y]) {
      seen[y] = 1;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

std::string Permutation::to_cycles() const {
  std::ostringstream os;
  std::vector<char> seen(images_.size(), 0);
  for (unsigned x = 0; x < images_.size(); ++x) {
    if (seen[x] || images_[x] == x) continue;
    os << '(';
    bool first = true;
    for (unsigned y = x; !seen[y]; y = images_[y]) {
      seen[y] = 1;
      if (!first) os << ' ';
      os << y + 1;
      first = false;
    }
    os << ')';
  }
  const auto s = os.str();
  return s.empty() ? "()" : s;
}

Group group_from_permutations(const std::vector<Permutation>& perms) {
  const std::size_t n = perms.size();
  if (n == 0 || !perms[0].is_identity()) fail(ErrorKind::InvalidSpec, "element 0 must be the identity");
  std::map<Permutation, Elem> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(perms[i], static_cast<Elem>(i));
  if (index.size() != n) fail(ErrorKind::InvalidSpec, "duplicate permutations");
  std::vector<Elem> flat(n * n);
  // g_i * g_j acts as g_j after g_i on points (left-to-right)
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto it = index.find(perms[i].then(perms[j]));
      if (it == index.end()) fail(ErrorKind::InvalidSpec, "permutation set is not closed");
      flat[i * n + j] = it->second;
    }
  std::vector<std::string> labels;
  for (const auto& p : perms) labels.push_back(p.to_cycles());
  return Group::trusted(std::move(flat), n, std::move(labels));
}

Group permutation_group(const std::vector<Permutation>& gens, std::size_t degree, std::size_t closure_cap) {
  for (const auto& g : gens)
    if (g.degree() != degree) fail(ErrorKind::InvalidSpec, "generator degree mismatch");
  std::vector<Permutation> elems{Permutation(degree)};
  std::map<Permutation, Elem> index{{elems[0], 0}};
  for (std::size_t head = 0; head < elems.size(); ++head)
    for (const auto& s : gens) {
      Permutation next = elems[head].then(s);
      if (index.emplace(next, static_cast<Elem>(elems.size())).second) {
        elems.push_back(std::move(next));
        if (elems.size() > closure_cap)
          fail(ErrorKind::ClosureLimitExceeded, "permutation closure exceeds " + std::to_string(closure_cap));
      }
    }
  return group_from_permutations(elems);
}

}  // namespace actionlab
