#include "mvbraid/coset_table.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace mvbraid {

CosetTable::CosetTable(std::vector<GeneratorId> generators, std::vector<std::vector<int>> action)
    : generators_(std::move(generators)), action_(std::move(action)) {
  if (action_.size() != 2 * generators_.size()) throw std::invalid_argument("coset table needs two columns per generator");
  degree_ = action_.empty() ? 1 : action_[0].size();
  for (const auto& col : action_)
    if (col.size() != degree_) throw std::invalid_argument("ragged coset table");
}

int CosetTable::generator_index(const GeneratorId& g) const {
  auto it = std::find(generators_.begin(), generators_.end(), g);
  return it == generators_.end() ? -1 : static_cast<int>(it - generators_.begin());
}

int CosetTable::act(int coset, const Letter& l) const {
  int g = generator_index(l.gen);
  if (g < 0) throw MissingImage(l.gen);
  return act(coset, static_cast<std::size_t>(g), l.exp);
}

int CosetTable::trace(const Word& w, int from) const {
  int c = from;
  for (const auto& l : w) c = act(c, l);
  return c;
}

bool CosetTable::consistent_with(const Presentation& p) const {
  for (std::size_t g = 0; g < generators_.size(); ++g)
    for (std::size_t c = 0; c < degree_; ++c) {
      int d = action_[2 * g][c];
      if (d < 0 || static_cast<std::size_t>(d) >= degree_) return false;
      if (action_[2 * g + 1][static_cast<std::size_t>(d)] != static_cast<int>(c)) return false;
    }
  for (const auto& r : p.relators())
    for (std::size_t c = 0; c < degree_; ++c)
      if (trace(r.word(), static_cast<int>(c)) != static_cast<int>(c)) return false;
  return true;
}

CosetTable CosetTable::standardized() const {
  std::vector<int> order, label(degree_, -1);
  order.reserve(degree_);
  label[0] = 0;
  order.push_back(0);
  for (std::size_t head = 0; head < order.size(); ++head)
    for (const auto& col : action_) {
      int d = col[static_cast<std::size_t>(order[head])];
      if (label[static_cast<std::size_t>(d)] < 0) {
        label[static_cast<std::size_t>(d)] = static_cast<int>(order.size());
        order.push_back(d);
      }
    }
  if (order.size() != degree_) throw std::logic_error("coset table is not transitive");
  std::vector<std::vector<int>> act(action_.size(), std::vector<int>(degree_));
  for (std::size_t col = 0; col < action_.size(); ++col)
    for (std::size_t c = 0; c < degree_; ++c)
      act[col][static_cast<std::size_t>(label[c])] = label[static_cast<std::size_t>(action_[col][c])];
  return CosetTable(generators_, std::move(act));
}

// ---------------------------------------------------------------------------

std::vector<Permutation> kernel_coset_images(const Presentation& p, const PermMap& images, int degree) {
  for (const auto& g : p.generators())
    if (!images.contains(g)) throw MissingImage(g);
  for (const auto& r : p.relators()) {
    auto img = evaluate(r.word(), images, degree);
    if (!img.is_identity()) throw NotWellDefined(r, img);
  }
  std::set<Permutation> seen{Permutation::identity(degree)};
  std::deque<Permutation> queue{Permutation::identity(degree)};
  while (!queue.empty()) {
    auto cur = queue.front();
    queue.pop_front();
    for (const auto& g : p.generators()) {
      auto next = cur * images.at(g);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  // std::set orders by image array, i.e. lexicographically.
  return {seen.begin(), seen.end()};
}

CosetTable kernel_coset_table(const Presentation& p, const PermMap& images, int degree) {
  auto cosets = kernel_coset_images(p, images, degree);
  std::map<Permutation, int> index;
  for (std::size_t i = 0; i < cosets.size(); ++i) index.emplace(cosets[i], static_cast<int>(i));
  std::vector<std::vector<int>> action(2 * p.generators().size(), std::vector<int>(cosets.size()));
  for (std::size_t g = 0; g < p.generators().size(); ++g) {
    const auto& img = images.at(p.generators()[g]);
    const auto inv = img.inverse();
    for (std::size_t c = 0; c < cosets.size(); ++c) {
      action[2 * g][c] = index.at(cosets[c] * img);
      action[2 * g + 1][c] = index.at(cosets[c] * inv);
    }
  }
  return CosetTable(p.generators(), std::move(action));
}

// ---------------------------------------------------------------------------
// HLT enumeration.  Columns are 2g (generator g) and 2g+1 (its inverse).

namespace {

class Enumerator {
 public:
  Enumerator(std::size_t columns, std::size_t max_cosets) : cols_(columns), max_(max_cosets) { new_coset(); }

  static std::size_t inv(std::size_t col) { return col ^ 1U; }

  int new_coset() {
    if (live_ >= max_) throw ResourceLimit("coset enumeration exceeded " + std::to_string(max_) + " live cosets");
    table_.emplace_back(cols_, -1);
    forward_.push_back(static_cast<int>(forward_.size()));
    ++live_;
    return static_cast<int>(table_.size() - 1);
  }

  bool alive(int c) const { return forward_[static_cast<std::size_t>(c)] == c; }
  std::size_t allocated() const { return table_.size(); }

  int& entry(int c, std::size_t col) { return table_[static_cast<std::size_t>(c)][col]; }

  void define(int c, std::size_t col) {
    int d = new_coset();
    entry(c, col) = d;
    entry(d, inv(col)) = c;
  }

  // Scan coset c under the column word w, filling gaps by definition.
  void scan_and_fill(int c, const std::vector<std::size_t>& w) {
    if (w.empty()) return;
    std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(w.size()) - 1;
    int f = c, b = c;
    auto at = [&](std::ptrdiff_t k) { return w[static_cast<std::size_t>(k)]; };
    while (true) {
      while (i <= j && entry(f, at(i)) >= 0) f = entry(f, at(i++));
      if (i > j) {
        if (f != c) coincidence(f, c);
        return;
      }
      while (j >= i && entry(b, inv(at(j))) >= 0) b = entry(b, inv(at(j--)));
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        entry(f, at(i)) = b;
        entry(b, inv(at(i))) = f;
        return;
      }
      define(f, at(i));
    }
  }

  int rep(int c) {
    int r = c;
    while (forward_[static_cast<std::size_t>(r)] != r) r = forward_[static_cast<std::size_t>(r)];
    while (forward_[static_cast<std::size_t>(c)] != r) {
      int nxt = forward_[static_cast<std::size_t>(c)];
      forward_[static_cast<std::size_t>(c)] = r;
      c = nxt;
    }
    return r;
  }

  void merge(int a, int b, std::vector<int>& queue) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    forward_[static_cast<std::size_t>(b)] = a;
    --live_;
    queue.push_back(b);
  }

  void coincidence(int a, int b) {
    std::vector<int> queue;
    merge(a, b, queue);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      int e = queue[q];
      for (std::size_t col = 0; col < cols_; ++col) {
        int f = entry(e, col);
        if (f < 0) continue;
        if (entry(f, inv(col)) == e) entry(f, inv(col)) = -1;
        int e1 = rep(e), f1 = rep(f);
        if (entry(e1, col) >= 0) {
          merge(f1, entry(e1, col), queue);
        } else if (entry(f1, inv(col)) >= 0) {
          merge(e1, entry(f1, inv(col)), queue);
        } else {
          entry(e1, col) = f1;
          entry(f1, inv(col)) = e1;
        }
      }
    }
  }

  // Compacted, complete table of live cosets.
  std::vector<std::vector<int>> compact() {
    std::vector<int> label(table_.size(), -1);
    int next = 0;
    for (std::size_t c = 0; c < table_.size(); ++c)
      if (alive(static_cast<int>(c))) label[c] = next++;
    std::vector<std::vector<int>> out(cols_, std::vector<int>(static_cast<std::size_t>(next)));
    for (std::size_t c = 0; c < table_.size(); ++c) {
      if (label[c] < 0) continue;
      for (std::size_t col = 0; col < cols_; ++col) {
        int d = table_[c][col];
        if (d < 0) throw std::logic_error("incomplete coset table after enumeration");
        out[col][static_cast<std::size_t>(label[c])] = label[static_cast<std::size_t>(rep(d))];
      }
    }
    return out;
  }

 private:
  std::size_t cols_;
  std::size_t max_;
  std::size_t live_ = 0;
  std::vector<std::vector<int>> table_;
  std::vector<int> forward_;
};

std::vector<std::size_t> to_columns(const Word& w, const std::vector<GeneratorId>& gens) {
  std::vector<std::size_t> out;
  out.reserve(w.size());
  for (const auto& l : w) {
    auto it = std::find(gens.begin(), gens.end(), l.gen);
    if (it == gens.end()) throw MissingImage(l.gen);
    out.push_back(2 * static_cast<std::size_t>(it - gens.begin()) + (l.exp > 0 ? 0 : 1));
  }
  return out;
}

}  // namespace

CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup_generators, std::size_t max_cosets) {
  const auto& gens = p.generators();
  const std::size_t cols = 2 * gens.size();
  Enumerator en(cols, max_cosets);

  std::vector<std::vector<std::size_t>> rels;
  for (const auto& r : p.relators()) rels.push_back(to_columns(r.word(), gens));

  for (const auto& h : subgroup_generators) en.scan_and_fill(0, to_columns(h, gens));

  for (int c = 0; static_cast<std::size_t>(c) < en.allocated(); ++c) {
    for (const auto& r : rels) {
      if (!en.alive(c)) break;
      en.scan_and_fill(c, r);
    }
    for (std::size_t col = 0; col < cols && en.alive(c); ++col)
      if (en.entry(c, col) < 0) en.define(c, col);
  }
  return CosetTable(gens, en.compact());
}

// ---------------------------------------------------------------------------

std::vector<Word> lambda_words(int n) {
  std::vector<Word> out{Word()};
  for (int k = 2; k <= n; ++k) {
    std::vector<Word> next;
    for (const auto& prefix : out)
      for (int j = k; j >= 1; --j) {
        std::vector<Letter> m;
        for (int i = k - 1; i >= j; --i) m.push_back({GeneratorId::rho(i), 1});
        next.push_back(concat(prefix, Word(std::move(m))));
      }
    out = std::move(next);
  }
  return out;
}

Transversal schreier_transversal(const CosetTable& t, TransversalStrategy strategy, int n) {
  std::vector<std::optional<Word>> reps(t.degree());
  if (strategy == TransversalStrategy::bfs) {
    reps[0] = Word();
    std::vector<int> queue{0};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int c = queue[head];
      for (std::size_t g = 0; g < t.generators().size(); ++g)
        for (int e : {1, -1}) {
          int d = t.act(c, g, e);
          if (reps[static_cast<std::size_t>(d)]) continue;
          reps[static_cast<std::size_t>(d)] = concat(*reps[static_cast<std::size_t>(c)], Word::of(t.generators()[g], e));
          queue.push_back(d);
        }
    }
  } else {
    for (int i = 1; i < n; ++i)
      if (t.generator_index(GeneratorId::rho(i)) < 0)
        throw IncompatibleTable("lambda transversal needs generator " + GeneratorId::rho(i).str());
    auto words = lambda_words(n);
    if (words.size() != t.degree())
      throw IncompatibleTable("table has " + std::to_string(t.degree()) + " cosets, transversal has " +
                              std::to_string(words.size()) + " words");
    for (auto& w : words) {
      int c = t.trace(w);
      if (reps[static_cast<std::size_t>(c)])
        throw IncompatibleTable("words " + reps[static_cast<std::size_t>(c)]->str() + " and " + w.str() +
                                " reach the same coset");
      reps[static_cast<std::size_t>(c)] = std::move(w);
    }
  }
  std::vector<Word> out;
  for (auto& r : reps) {
    if (!r) throw IncompatibleTable("coset table is not transitive");
    out.push_back(std::move(*r));
  }
  return Transversal(std::move(out));
}

bool is_schreier_transversal(const CosetTable& t, const Transversal& tr) {
  if (tr.size() != t.degree() || !tr.rep(0).empty()) return false;
  for (std::size_t c = 0; c < tr.size(); ++c) {
    const auto& w = tr.rep(static_cast<int>(c));
    if (t.trace(w) != static_cast<int>(c)) return false;
    for (std::size_t len = 0; len < w.size(); ++len) {
      Word prefix(std::vector<Letter>(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(len)));
      if (tr.rep(t.trace(prefix)) != prefix) return false;
    }
  }
  return true;
}

Word representative(const Word& w, const CosetTable& t, const Transversal& tr) { return tr.rep(t.trace(w)); }

}  // namespace mvbraid
