#include "mvbraid/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace mvbraid {

GeneratorId::GeneratorId(Family f, std::initializer_list<int> indices)
    : family_(f), arity_(static_cast<std::uint8_t>(indices.size())) {
  std::copy(indices.begin(), indices.end(), idx_.begin());
}

GeneratorId GeneratorId::user(std::string name) {
  GeneratorId g;
  g.family_ = Family::user;
  g.name_ = std::move(name);
  return g;
}

GeneratorId GeneratorId::schreier(int coset, const GeneratorId& ambient) {
  GeneratorId g(Family::schreier, {coset});
  g.name_ = ambient.str();
  return g;
}

GeneratorId GeneratorId::ambient() const {
  if (family_ != Family::schreier) throw std::logic_error("not a Schreier symbol: " + str());
  return parse_generator(name_);
}

std::string GeneratorId::str() const {
  auto join = [this](char head, std::size_t count) {
    std::string s(1, head);
    for (std::size_t k = 0; k < count; ++k) {
      if (k) s += '.';
      s += std::to_string(idx_[k]);
    }
    return s;
  };
  switch (family_) {
    case Family::sigma: return join('s', 1);
    case Family::rho: return join('r', idx_[1] == 0 ? 1 : 2);
    case Family::lambda: return join('l', idx_[2] == 0 ? 2 : 3);
    case Family::x: return join('x', idx_[2] == 0 ? 2 : 3);
    case Family::mu: return join('m', 2);
    case Family::y: return join('y', 2);
    case Family::z: return join('z', 2);
    case Family::schreier: return "S[" + std::to_string(idx_[0]) + ";" + name_ + "]";
    case Family::user: return name_;
  }
  return name_;
}

std::strong_ordering compare(const Letter& a, const Letter& b) {
  if (auto c = a.gen <=> b.gen; c != 0) return c;
  // +1 sorts before -1
  return b.exp <=> a.exp;
}

std::strong_ordering compare(const Word& a, const Word& b) {
  const auto n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i)
    if (auto c = compare(a[i], b[i]); c != 0) return c;
  return a.size() <=> b.size();
}

Word free_reduce(std::vector<Letter> letters) { return Word(std::move(letters)); }

Word::Word(std::vector<Letter> letters) {
  letters_.reserve(letters.size());
  for (auto& l : letters) {
    if (l.exp != 1 && l.exp != -1) throw std::invalid_argument("letter exponent must be +1 or -1");
    if (!letters_.empty() && letters_.back().cancels(l))
      letters_.pop_back();
    else
      letters_.push_back(std::move(l));
  }
}

Word invert(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) out.push_back(it->inverse());
  return Word(std::move(out));
}

Word concat(const Word& a, const Word& b) {
  std::vector<Letter> out(a.letters());
  out.insert(out.end(), b.begin(), b.end());
  return Word(std::move(out));
}

Word concat(std::initializer_list<Word> parts) {
  std::vector<Letter> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return Word(std::move(out));
}

int exponent_sum(const Word& w, const GeneratorId& g) {
  int s = 0;
  for (const auto& l : w)
    if (l.gen == g) s += l.exp;
  return s;
}

std::size_t occurrences(const Word& w, const GeneratorId& g) {
  return static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [&](const Letter& l) { return l.gen == g; }));
}

namespace {

Word substitute_impl(const Word& w, const WordMap& images, bool partial) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (const auto& l : w) {
    auto it = images.find(l.gen);
    if (it == images.end()) {
      if (!partial) throw MissingImage(l.gen);
      out.push_back(l);
      continue;
    }
    const auto& img = it->second.letters();
    if (l.exp > 0)
      out.insert(out.end(), img.begin(), img.end());
    else
      for (auto r = img.rbegin(); r != img.rend(); ++r) out.push_back(r->inverse());
  }
  return Word(std::move(out));
}

}  // namespace

Word substitute(const Word& w, const WordMap& images) { return substitute_impl(w, images, false); }
Word substitute_partial(const Word& w, const WordMap& images) { return substitute_impl(w, images, true); }

Word cyclic_reduce(const Word& w) {
  const auto& ls = w.letters();
  std::size_t lo = 0, hi = ls.size();
  while (hi - lo >= 2 && ls[lo].cancels(ls[hi - 1])) {
    ++lo;
    --hi;
  }
  return Word(std::vector<Letter>(ls.begin() + static_cast<std::ptrdiff_t>(lo),
                                  ls.begin() + static_cast<std::ptrdiff_t>(hi)));
}

namespace {

// Index of the least rotation of ls (naive O(n^2); relators are short).
std::size_t least_rotation(const std::vector<Letter>& ls) {
  const std::size_t n = ls.size();
  std::size_t best = 0;
  for (std::size_t r = 1; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      auto c = compare(ls[(r + k) % n], ls[(best + k) % n]);
      if (c < 0) {
        best = r;
        break;
      }
      if (c > 0) break;
    }
  }
  return best;
}

std::vector<Letter> rotated(const std::vector<Letter>& ls, std::size_t r) {
  std::vector<Letter> out;
  out.reserve(ls.size());
  for (std::size_t k = 0; k < ls.size(); ++k) out.push_back(ls[(r + k) % ls.size()]);
  return out;
}

}  // namespace

Relator::Relator(const Word& w) {
  Word c = cyclic_reduce(w);
  if (c.empty()) return;
  auto fwd = rotated(c.letters(), least_rotation(c.letters()));
  Word inv = invert(c);
  auto bwd = rotated(inv.letters(), least_rotation(inv.letters()));
  Word a(std::move(fwd)), b(std::move(bwd));
  word_ = compare(a, b) <= 0 ? std::move(a) : std::move(b);
}

Relator relation(const Word& lhs, const Word& rhs) { return Relator(concat(lhs, invert(rhs))); }
Relator relation(std::string_view lhs, std::string_view rhs) { return relation(Word::parse(lhs), Word::parse(rhs)); }

// ---------------------------------------------------------------------------
// Parsing and printing

namespace {

int parse_int(std::string_view s, std::string_view context) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty())
    throw ParseError("bad integer '" + std::string(s) + "' in '" + std::string(context) + "'");
  return v;
}

std::vector<int> parse_indices(std::string_view s, std::string_view token) {
  std::vector<int> out;
  std::size_t start = 0;
  while (true) {
    auto dot = s.find('.', start);
    out.push_back(parse_int(s.substr(start, dot == std::string_view::npos ? s.npos : dot - start), token));
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return out;
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

}  // namespace

GeneratorId parse_generator(std::string_view tok) {
  if (tok.starts_with("S[")) {
    auto semi = tok.find(';');
    if (semi == tok.npos || !tok.ends_with("]")) throw ParseError("bad Schreier symbol '" + std::string(tok) + "'");
    int coset = parse_int(tok.substr(2, semi - 2), tok);
    return GeneratorId::schreier(coset, parse_generator(tok.substr(semi + 1, tok.size() - semi - 2)));
  }
  if (tok.size() >= 2 && std::string_view("srtlxmyz").find(tok[0]) != std::string_view::npos &&
      std::isdigit(static_cast<unsigned char>(tok[1]))) {
    auto ix = parse_indices(tok.substr(1), tok);
    auto need = [&](std::size_t lo, std::size_t hi) {
      if (ix.size() < lo || ix.size() > hi)
        throw ParseError("wrong number of indices in '" + std::string(tok) + "'");
    };
    switch (tok[0]) {
      case 's': need(1, 1); return GeneratorId::sigma(ix[0]);
      case 'r': need(1, 2); return GeneratorId::rho(ix[0], ix.size() > 1 ? ix[1] : 0);
      case 't': need(1, 1); return GeneratorId::tau(ix[0]);
      case 'l': need(2, 3); return GeneratorId::lambda(ix[0], ix[1], ix.size() > 2 ? ix[2] : 0);
      case 'x': need(2, 3); return GeneratorId::x(ix[0], ix[1], ix.size() > 2 ? ix[2] : 0);
      case 'm': need(2, 2); return GeneratorId::mu(ix[0], ix[1]);
      case 'y': need(2, 2); return GeneratorId::y(ix[0], ix[1]);
      case 'z': need(2, 2); return GeneratorId::z(ix[0], ix[1]);
      default: break;
    }
  }
  if (is_identifier(tok)) return GeneratorId::user(std::string(tok));
  throw ParseError("bad generator token '" + std::string(tok) + "'");
}

Word Word::parse(std::string_view text) {
  std::vector<Letter> out;
  std::size_t i = 0;
  const auto n = text.size();
  while (i < n) {
    if (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '*') {
      ++i;
      continue;
    }
    std::size_t j = i;
    if (text.substr(i).starts_with("S[")) {
      auto close = text.find(']', i);
      if (close == text.npos) throw ParseError("unterminated Schreier symbol in '" + std::string(text) + "'");
      j = close + 1;
    } else {
      while (j < n && !std::isspace(static_cast<unsigned char>(text[j])) && text[j] != '^' && text[j] != '*') ++j;
    }
    auto atom = text.substr(i, j - i);
    int power = 1;
    if (j < n && text[j] == '^') {
      std::size_t start = j + 1;
      if (start < n && text[start] == '+') ++start;
      std::size_t k = start;
      if (k < n && text[k] == '-') ++k;
      while (k < n && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
      power = parse_int(text.substr(start, k - start), text);
      if (power == 0) throw ParseError("zero power in '" + std::string(text) + "'");
      j = k;
    }
    if (atom == "1" || atom == "e") {
      i = j;
      continue;
    }
    auto g = parse_generator(atom);
    for (int p = 0; p < std::abs(power); ++p) out.push_back(Letter{g, power > 0 ? 1 : -1});
    i = j;
  }
  return Word(std::move(out));
}

std::string Word::str() const {
  std::string s;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) s += ' ';
    s += letters_[i].gen.str();
    if (letters_[i].exp < 0) s += "^-1";
  }
  return s;
}

}  // namespace mvbraid
