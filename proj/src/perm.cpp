#include "mvbraid/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace mvbraid {

Permutation Permutation::identity(int n) {
  Permutation p;
  p.images_.resize(static_cast<std::size_t>(n));
  std::iota(p.images_.begin(), p.images_.end(), 1);
  return p;
}

Permutation Permutation::from_images(std::vector<int> images) {
  std::vector<bool> hit(images.size() + 1, false);
  for (int v : images) {
    if (v < 1 || v > static_cast<int>(images.size()) || hit[static_cast<std::size_t>(v)])
      throw std::invalid_argument("image array is not a permutation");
    hit[static_cast<std::size_t>(v)] = true;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  Permutation p = identity(n);
  for (const auto& cyc : cycles) {
    Permutation c = identity(n);
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
      if (a < 1 || a > n || b < 1 || b > n) throw std::invalid_argument("cycle point out of range");
      c.images_[static_cast<std::size_t>(a - 1)] = b;
    }
    p = p * from_images(c.images_);
  }
  return p;
}

Permutation Permutation::parse(std::string_view text, int n) {
  auto numbers = [](std::string_view s) {
    std::vector<int> out;
    std::string cur;
    for (char ch : s) {
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        cur += ch;
      } else if (!cur.empty()) {
        out.push_back(std::stoi(cur));
        cur.clear();
      }
    }
    if (!cur.empty()) out.push_back(std::stoi(cur));
    return out;
  };
  auto first = text.find_first_not_of(" \t");
  if (first == text.npos) throw ParseError("empty permutation");
  if (text[first] == '[') {
    auto p = from_images(numbers(text));
    if (n > 0 && p.degree() != n) throw DegreeMismatch("permutation has degree " + std::to_string(p.degree()));
    return p;
  }
  std::vector<std::vector<int>> cycles;
  std::size_t i = first;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != '(') throw ParseError("bad permutation '" + std::string(text) + "'");
    auto close = text.find(')', i);
    if (close == text.npos) throw ParseError("unbalanced cycle in '" + std::string(text) + "'");
    auto c = numbers(text.substr(i + 1, close - i - 1));
    if (!c.empty()) cycles.push_back(std::move(c));
    i = close + 1;
  }
  return from_cycles(n, cycles);
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i + 1)) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation q = *this;
  for (std::size_t i = 0; i < images_.size(); ++i) q.images_[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i + 1);
  return q;
}

Permutation Permutation::operator*(const Permutation& q) const {
  if (q.degree() != degree()) throw DegreeMismatch("cannot multiply permutations of different degree");
  Permutation r = *this;
  for (auto& v : r.images_) v = q.images_[static_cast<std::size_t>(v - 1)];
  return r;
}

std::string Permutation::str() const {
  std::ostringstream os;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t s = 0; s < images_.size(); ++s) {
    if (seen[s] || images_[s] == static_cast<int>(s + 1)) continue;
    os << '(';
    std::size_t cur = s;
    bool first = true;
    while (!seen[cur]) {
      seen[cur] = true;
      os << (first ? "" : " ") << cur + 1;
      first = false;
      cur = static_cast<std::size_t>(images_[cur] - 1);
    }
    os << ')';
  }
  auto s = os.str();
  return s.empty() ? "()" : s;
}

std::string Permutation::one_line() const {
  std::string s = "[";
  for (std::size_t i = 0; i < images_.size(); ++i) s += (i ? "," : "") + std::to_string(images_[i]);
  return s + "]";
}

Permutation evaluate(const Word& w, const PermMap& images, int degree) {
  Permutation acc = Permutation::identity(degree);
  for (const auto& l : w) {
    auto it = images.find(l.gen);
    if (it == images.end()) throw MissingImage(l.gen);
    if (it->second.degree() != degree)
      throw DegreeMismatch("image of " + l.gen.str() + " has degree " + std::to_string(it->second.degree()));
    acc = acc * (l.exp > 0 ? it->second : it->second.inverse());
  }
  return acc;
}

Permutation evaluate(const Word& w, const PermMap& images) {
  if (images.empty()) {
    if (!w.empty()) throw MissingImage(w[0].gen);
    return Permutation::identity(0);
  }
  int n = images.begin()->second.degree();
  for (const auto& [g, p] : images)
    if (p.degree() != n) throw DegreeMismatch("images have mixed degrees");
  return evaluate(w, images, n);
}

std::vector<Permutation> enumerate_symmetric(int n) {
  if (n < 1 || n > 8) throw std::out_of_range("enumerate_symmetric: n must lie in 1..8");
  std::vector<int> a(static_cast<std::size_t>(n));
  std::iota(a.begin(), a.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_images(a));
  } while (std::next_permutation(a.begin(), a.end()));
  return out;
}

std::size_t lex_rank(const Permutation& p) {
  // Lehmer code.
  const auto im = p.images();
  std::size_t rank = 0;
  for (std::size_t i = 0; i < im.size(); ++i) {
    std::size_t smaller = 0;
    for (std::size_t j = i + 1; j < im.size(); ++j)
      if (im[j] < im[i]) ++smaller;
    rank = rank * (im.size() - i) + smaller;
  }
  return rank;
}

}  // namespace mvbraid
