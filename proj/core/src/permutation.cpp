#include "rcg/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "rcg/errors.hpp"

namespace rcg {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  if (degree == 0) throw InvalidInput("permutation degree must be positive");
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation Permutation::from_images(std::vector<Point> images) {
  if (images.empty()) throw InvalidInput("permutation degree must be positive");
  std::vector<bool> seen(images.size(), false);
  for (Point v : images) {
    if (v >= images.size()) {
      throw InvalidInput("image " + std::to_string(v) + " out of range for degree " +
                         std::to_string(images.size()));
    }
    if (seen[v]) throw InvalidInput("image " + std::to_string(v) + " repeated");
    seen[v] = true;
  }
  return Permutation(std::move(images), 0);
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles) {
  Permutation p(degree);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (Point pt : cycle) {
      if (pt >= degree) {
        throw InvalidInput("cycle point " + std::to_string(pt) + " >= degree " +
                           std::to_string(degree));
      }
      if (used[pt]) throw InvalidInput("cycle point " + std::to_string(pt) + " repeated");
      used[pt] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      p.images_[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
  }
  return p;
}

Permutation Permutation::parse_cycles(std::size_t degree, std::string_view text,
                                      bool one_based) {
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') {
      throw InvalidInput("expected '(' in cycle string \"" + std::string(text) + "\"");
    }
    ++i;
    std::vector<Point> cycle;
    for (;;) {
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw InvalidInput("malformed cycle string \"" + std::string(text) + "\"");
      }
      std::uint64_t value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (value > 0xffffffffULL) throw InvalidInput("cycle point too large");
        ++i;
      }
      if (one_based) {
        if (value == 0) throw InvalidInput("point 0 in one-based cycle string");
        --value;
      }
      cycle.push_back(static_cast<Point>(value));
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip_ws();
  }
  return from_cycles(degree, cycles);
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
  return Permutation(std::move(inv), 0);
}

Permutation Permutation::power(long long k) const {
  Permutation base = k < 0 ? inverse() : *this;
  // Negating LLONG_MIN is undefined; reduce by the order first.
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
  e %= order();
  Permutation result(degree());
  while (e > 0) {
    if (e & 1U) result = compose(result, base);
    base = compose(base, base);
    e >>= 1U;
  }
  return result;
}

std::uint64_t Permutation::order() const {
  std::vector<bool> seen(images_.size(), false);
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (Point j = static_cast<Point>(i); !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

Point Permutation::first_moved_point() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return static_cast<Point>(i);
  }
  return static_cast<Point>(images_.size());
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    std::vector<Point> cycle;
    for (Point j = static_cast<Point>(i); !seen[j]; j = images_[j]) {
      seen[j] = true;
      cycle.push_back(j);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::to_cycle_string(bool one_based) const {
  const auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream out;
  for (const auto& cycle : cs) {
    out << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) out << ',';
      out << (cycle[i] + (one_based ? 1 : 0));
    }
    out << ')';
  }
  return out.str();
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw InvalidInput("degree mismatch: " + std::to_string(p.degree()) + " vs " +
                       std::to_string(q.degree()));
  }
  std::vector<Point> out(p.degree());
  const Point* pi = p.images_.data();
  const Point* qi = q.images_.data();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = qi[pi[i]];
  return Permutation(std::move(out), 0);
}

Permutation conjugate(const Permutation& x, const Permutation& g) {
  if (x.degree() != g.degree()) {
    throw InvalidInput("degree mismatch: " + std::to_string(x.degree()) + " vs " +
                       std::to_string(g.degree()));
  }
  // x^g maps g(i) to g(x(i)).
  std::vector<Point> out(x.degree());
  for (std::size_t i = 0; i < out.size(); ++i) out[g.images_[i]] = g.images_[x.images_[i]];
  return Permutation(std::move(out), 0);
}

Permutation commutator(const Permutation& a, const Permutation& b) {
  return compose(compose(a.inverse(), b.inverse()), compose(a, b));
}

bool commute(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw InvalidInput("degree mismatch");
  for (std::size_t i = 0; i < a.degree(); ++i) {
    if (b(a(static_cast<Point>(i))) != a(b(static_cast<Point>(i)))) return false;
  }
  return true;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  // FNV-1a over the image words.
  std::uint64_t h = 1469598103934665603ULL;
  for (Point v : p.images()) {
    h ^= v;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

}  // namespace rcg
