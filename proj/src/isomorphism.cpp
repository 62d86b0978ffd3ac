#include "drgcay/isomorphism.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "drgcay/errors.hpp"

namespace drgcay {

namespace {

using Trace = std::vector<std::uint32_t>;

// Ordered partition of the vertex set. Cells are identified by their start
// position, which keeps every operation independent of vertex names.
struct Partition {
  std::vector<int> elems;
  std::vector<int> pos;
  std::vector<int> cell;  // cell[v] = start of v's cell
  std::vector<int> len;   // len[start] = size, valid at cell starts
  int cells = 0;

  bool discrete() const { return cells == static_cast<int>(elems.size()); }
};

struct Leaf {
  std::vector<std::uint8_t> cert;
  std::vector<int> labeling;
  std::vector<int> path;
  std::vector<Trace> traces;
};

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

int compare_traces(const Trace& a, const Trace& b) {
  if (a < b) return -1;
  if (b < a) return 1;
  return 0;
}

class Canonizer {
 public:
  Canonizer(const Graph& g, const CanonOptions& options)
      : g_(g), n_(g.vertex_count()), budget_(options.node_budget), cnt_(static_cast<std::size_t>(n_), 0),
        inq_(static_cast<std::size_t>(n_), 0), cell_mark_(static_cast<std::size_t>(n_), 0) {
    rows_.reserve(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) {
      Bitset b(static_cast<std::size_t>(n_));
      for (int u : g.neighbors(v)) b.set(static_cast<std::size_t>(u));
      rows_.push_back(std::move(b));
    }
  }

  CanonicalLabeling run(const InvariantSummary& summary, const std::vector<std::vector<int>>& signatures) {
    CanonicalLabeling out;
    out.certificate.summary = summary;
    if (n_ == 0) {
      out.certificate.bytes = header();
      return out;
    }
    Partition root = initial_partition(signatures);
    Trace t;
    std::vector<int> all_starts;
    for (int s = 0; s < n_; s += root.len[static_cast<std::size_t>(s)]) all_starts.push_back(s);
    refine(root, all_starts, t);
    trace_stack_.assign(1, t);
    std::vector<int> path;
    search(root, 0, path, 0);
    out.certificate.bytes = best_.cert;
    out.order = best_.labeling;
    out.nodes = nodes_;
    out.automorphisms = std::move(generators_);
    return out;
  }

 private:
  std::vector<std::uint8_t> header() const {
    const auto n = static_cast<std::uint32_t>(n_);
    return {static_cast<std::uint8_t>(n >> 24), static_cast<std::uint8_t>(n >> 16), static_cast<std::uint8_t>(n >> 8),
            static_cast<std::uint8_t>(n)};
  }

  Partition initial_partition(const std::vector<std::vector<int>>& signatures) {
    Partition p;
    p.elems.resize(static_cast<std::size_t>(n_));
    std::iota(p.elems.begin(), p.elems.end(), 0);
    std::stable_sort(p.elems.begin(), p.elems.end(), [&](int a, int b) {
      return signatures[static_cast<std::size_t>(a)] < signatures[static_cast<std::size_t>(b)];
    });
    p.pos.resize(static_cast<std::size_t>(n_));
    p.cell.resize(static_cast<std::size_t>(n_));
    p.len.assign(static_cast<std::size_t>(n_), 0);
    int start = 0;
    for (int i = 0; i < n_; ++i) {
      const int v = p.elems[static_cast<std::size_t>(i)];
      if (i > 0 && signatures[static_cast<std::size_t>(v)] !=
                       signatures[static_cast<std::size_t>(p.elems[static_cast<std::size_t>(i - 1)])]) {
        p.len[static_cast<std::size_t>(start)] = i - start;
        start = i;
        ++p.cells;
      }
      p.pos[static_cast<std::size_t>(v)] = i;
      p.cell[static_cast<std::size_t>(v)] = start;
    }
    p.len[static_cast<std::size_t>(start)] = n_ - start;
    ++p.cells;
    return p;
  }

  // Splits cells by neighbour counts into splitter cells until equitable.
  void refine(Partition& p, const std::vector<int>& splitters, Trace& trace) {
    std::vector<int> queue;
    for (int s : splitters) {
      if (!inq_[static_cast<std::size_t>(s)]) {
        inq_[static_cast<std::size_t>(s)] = 1;
        queue.push_back(s);
      }
    }
    std::vector<int> members, touched, touched_cells;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      if (p.discrete()) break;
      const int w = queue[head];
      inq_[static_cast<std::size_t>(w)] = 0;
      const int wl = p.len[static_cast<std::size_t>(w)];
      members.assign(p.elems.begin() + w, p.elems.begin() + w + wl);
      for (int x : members)
        for (int u : g_.neighbors(x)) {
          if (cnt_[static_cast<std::size_t>(u)]++ == 0) touched.push_back(u);
        }
      for (int u : touched) {
        const int c = p.cell[static_cast<std::size_t>(u)];
        if (p.len[static_cast<std::size_t>(c)] > 1 && !cell_mark_[static_cast<std::size_t>(c)]) {
          cell_mark_[static_cast<std::size_t>(c)] = 1;
          touched_cells.push_back(c);
        }
      }
      std::sort(touched_cells.begin(), touched_cells.end());
      for (int c : touched_cells) {
        cell_mark_[static_cast<std::size_t>(c)] = 0;
        const int L = p.len[static_cast<std::size_t>(c)];
        auto first = p.elems.begin() + c;
        auto last = first + L;
        int lo = cnt_[static_cast<std::size_t>(*first)], hi = lo;
        for (auto it = first; it != last; ++it) {
          lo = std::min(lo, cnt_[static_cast<std::size_t>(*it)]);
          hi = std::max(hi, cnt_[static_cast<std::size_t>(*it)]);
        }
        if (lo == hi) continue;
        std::sort(first, last, [&](int a, int b) { return cnt_[static_cast<std::size_t>(a)] < cnt_[static_cast<std::size_t>(b)]; });
        trace.push_back(static_cast<std::uint32_t>(c));
        trace.push_back(static_cast<std::uint32_t>(w));
        int f = c;
        for (int i = c; i <= c + L; ++i) {
          const bool boundary = i == c + L || (i > c && cnt_[static_cast<std::size_t>(p.elems[static_cast<std::size_t>(i)])] !=
                                                           cnt_[static_cast<std::size_t>(p.elems[static_cast<std::size_t>(i - 1)])]);
          if (!boundary) continue;
          p.len[static_cast<std::size_t>(f)] = i - f;
          trace.push_back(static_cast<std::uint32_t>(cnt_[static_cast<std::size_t>(p.elems[static_cast<std::size_t>(f)])]));
          trace.push_back(static_cast<std::uint32_t>(i - f));
          for (int j = f; j < i; ++j) {
            const int v = p.elems[static_cast<std::size_t>(j)];
            p.pos[static_cast<std::size_t>(v)] = j;
            p.cell[static_cast<std::size_t>(v)] = f;
          }
          if (f != c) ++p.cells;
          if (!inq_[static_cast<std::size_t>(f)]) {
            inq_[static_cast<std::size_t>(f)] = 1;
            queue.push_back(f);
          }
          f = i;
        }
      }
      touched_cells.clear();
      for (int u : touched) cnt_[static_cast<std::size_t>(u)] = 0;
      touched.clear();
    }
    for (std::size_t i = 0; i < queue.size(); ++i) inq_[static_cast<std::size_t>(queue[i])] = 0;
  }

  int individualize(Partition& p, int v) {
    const int c = p.cell[static_cast<std::size_t>(v)];
    const int L = p.len[static_cast<std::size_t>(c)];
    const int u = p.elems[static_cast<std::size_t>(c)];
    const int pv = p.pos[static_cast<std::size_t>(v)];
    p.elems[static_cast<std::size_t>(c)] = v;
    p.elems[static_cast<std::size_t>(pv)] = u;
    p.pos[static_cast<std::size_t>(u)] = pv;
    p.pos[static_cast<std::size_t>(v)] = c;
    p.len[static_cast<std::size_t>(c)] = 1;
    p.len[static_cast<std::size_t>(c + 1)] = L - 1;
    for (int i = c + 1; i < c + L; ++i) p.cell[static_cast<std::size_t>(p.elems[static_cast<std::size_t>(i)])] = c + 1;
    ++p.cells;
    return c;
  }

  int target_cell(const Partition& p) const {
    int best = -1, best_len = n_ + 1;
    for (int s = 0; s < n_; s += p.len[static_cast<std::size_t>(s)]) {
      const int L = p.len[static_cast<std::size_t>(s)];
      if (L > 1 && L < best_len) {
        best = s;
        best_len = L;
      }
    }
    return best;
  }

  std::vector<std::uint8_t> leaf_certificate(const Partition& p) const {
    auto bytes = header();
    const std::size_t pairs = static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_ - 1) / 2;
    bytes.resize(4 + (pairs + 7) / 8, 0);
    std::size_t bit = 0;
    for (int i = 0; i < n_; ++i) {
      const auto& row = rows_[static_cast<std::size_t>(p.elems[static_cast<std::size_t>(i)])];
      for (int j = i + 1; j < n_; ++j, ++bit)
        if (row.test(static_cast<std::size_t>(p.elems[static_cast<std::size_t>(j)])))
          bytes[4 + bit / 8] |= static_cast<std::uint8_t>(0x80U >> (bit % 8));
    }
    return bytes;
  }

  static int common_prefix(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t i = 0;
    while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
    return static_cast<int>(i);
  }

  void record_automorphism(const std::vector<int>& from, const std::vector<int>& to) {
    std::vector<int> gamma(static_cast<std::size_t>(n_));
    bool identity = true;
    for (int i = 0; i < n_; ++i) {
      gamma[static_cast<std::size_t>(from[static_cast<std::size_t>(i)])] = to[static_cast<std::size_t>(i)];
      identity = identity && from[static_cast<std::size_t>(i)] == to[static_cast<std::size_t>(i)];
    }
    if (!identity) generators_.push_back(std::move(gamma));
  }

  Leaf make_leaf(const Partition& p, std::vector<std::uint8_t> cert, const std::vector<int>& path) const {
    return Leaf{std::move(cert), p.elems, path, trace_stack_};
  }

  // Returns the level to resume at after an automorphism-induced jump, or -1.
  int leaf(const Partition& p, const std::vector<int>& path, int cmp_best) {
    auto cert = leaf_certificate(p);
    if (!have_first_) {
      first_ = make_leaf(p, std::move(cert), path);
      best_ = first_;
      have_first_ = true;
      return -1;
    }
    int jump = -1;
    if (cert == first_.cert) {
      record_automorphism(p.elems, first_.labeling);
      jump = common_prefix(path, first_.path);
    }
    if (cmp_best > 0) {
      best_ = make_leaf(p, std::move(cert), path);
      return jump;
    }
    if (best_.cert < cert) {
      best_ = make_leaf(p, std::move(cert), path);
    } else if (cert == best_.cert) {
      if (cert != first_.cert) record_automorphism(p.elems, best_.labeling);
      jump = std::max(jump, common_prefix(path, best_.path));
    }
    return jump;
  }

  bool pruned(const std::vector<int>& prefix, const std::vector<int>& explored, int w, std::size_t& gens_seen,
              std::optional<UnionFind>& orbits) {
    if (explored.empty() || generators_.empty()) return false;
    if (!orbits || gens_seen != generators_.size()) {
      if (!orbits) orbits.emplace(static_cast<std::size_t>(n_));
      for (; gens_seen < generators_.size(); ++gens_seen) {
        const auto& gamma = generators_[gens_seen];
        const bool fixes = std::all_of(prefix.begin(), prefix.end(),
                                       [&](int v) { return gamma[static_cast<std::size_t>(v)] == v; });
        if (!fixes) continue;
        for (int v = 0; v < n_; ++v) orbits->unite(v, gamma[static_cast<std::size_t>(v)]);
      }
    }
    const int root = orbits->find(w);
    return std::any_of(explored.begin(), explored.end(), [&](int u) { return orbits->find(u) == root; });
  }

  int search(const Partition& p, int level, std::vector<int>& path, int cmp_best) {
    if (++nodes_ > budget_)
      throw ResourceCap("canonical labeling exceeded node budget of " + std::to_string(budget_));
    if (p.discrete()) return leaf(p, path, cmp_best);

    const int target = target_cell(p);
    const std::vector<int> candidates(p.elems.begin() + target,
                                      p.elems.begin() + target + p.len[static_cast<std::size_t>(target)]);
    std::vector<int> explored;
    std::size_t gens_seen = 0;
    std::optional<UnionFind> orbits;
    for (int w : candidates) {
      if (pruned(path, explored, w, gens_seen, orbits)) continue;
      explored.push_back(w);
      Partition child = p;
      Trace t;
      const int c = individualize(child, w);
      t.push_back(static_cast<std::uint32_t>(c));
      refine(child, {c}, t);

      const std::size_t next = static_cast<std::size_t>(level) + 1;
      int child_cmp = cmp_best;
      if (have_first_ && cmp_best == 0) {
        const int cmp = next < best_.traces.size() ? compare_traces(t, best_.traces[next]) : 1;
        if (cmp < 0) continue;
        if (cmp > 0) child_cmp = 1;
      }
      trace_stack_.resize(next);
      trace_stack_.push_back(std::move(t));
      path.push_back(w);
      const int r = search(child, level + 1, path, child_cmp);
      path.pop_back();
      if (r >= 0 && r < level) return r;
      // Once this subtree produced a better leaf, siblings compare against it.
      if (child_cmp > 0) cmp_best = 0;
    }
    return -1;
  }

  const Graph& g_;
  int n_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<Bitset> rows_;
  std::vector<int> cnt_;
  std::vector<char> inq_;
  std::vector<char> cell_mark_;
  std::vector<Trace> trace_stack_;
  bool have_first_ = false;
  Leaf first_;
  Leaf best_;
  std::vector<std::vector<int>> generators_;
};

std::vector<std::vector<int>> vertex_signatures(const Graph& g) {
  std::vector<std::vector<int>> sig(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto d = bfs_distances(g, v);
    auto& s = sig[static_cast<std::size_t>(v)];
    int unreachable = 0;
    for (int x : d) {
      if (x < 0) {
        ++unreachable;
        continue;
      }
      if (static_cast<std::size_t>(x) >= s.size()) s.resize(static_cast<std::size_t>(x) + 1, 0);
      ++s[static_cast<std::size_t>(x)];
    }
    s.push_back(-unreachable);  // keeps the sentinel distinct from any sphere size
  }
  return sig;
}

InvariantSummary summary_from(const Graph& g, const std::vector<std::vector<int>>& sig) {
  InvariantSummary s;
  s.vertex_count = g.vertex_count();
  for (int v = 0; v < g.vertex_count(); ++v) s.degrees.push_back(g.degree(v));
  std::sort(s.degrees.begin(), s.degrees.end());
  s.distance_signature = sig;
  std::sort(s.distance_signature.begin(), s.distance_signature.end());
  return s;
}

}  // namespace

std::string CanonicalCertificate::hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (auto b : bytes) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 15]);
  }
  return out;
}

InvariantSummary invariant_summary(const Graph& g) { return summary_from(g, vertex_signatures(g)); }

CanonicalLabeling canonical_labeling(const Graph& g, const CanonOptions& options) {
  const auto sig = vertex_signatures(g);
  Canonizer c(g, options);
  return c.run(summary_from(g, sig), sig);
}

CanonicalCertificate canonical_form(const Graph& g, const CanonOptions& options) {
  return canonical_labeling(g, options).certificate;
}

bool is_isomorphism(const Graph& g1, const Graph& g2, std::span<const int> mapping) {
  const int n = g1.vertex_count();
  if (n != g2.vertex_count() || mapping.size() != static_cast<std::size_t>(n)) return false;
  if (g1.edge_count() != g2.edge_count()) return false;
  std::vector<char> hit(static_cast<std::size_t>(n), 0);
  for (int m : mapping) {
    if (m < 0 || m >= n || hit[static_cast<std::size_t>(m)]) return false;
    hit[static_cast<std::size_t>(m)] = 1;
  }
  for (auto [u, v] : g1.edges())
    if (!g2.adjacent(mapping[static_cast<std::size_t>(u)], mapping[static_cast<std::size_t>(v)])) return false;
  return true;
}

std::vector<int> mapping_from_labelings(const CanonicalLabeling& l1, const CanonicalLabeling& l2) {
  if (l1.order.size() != l2.order.size()) throw StructuralError("labelings of different sizes");
  std::vector<int> mapping(l1.order.size());
  for (std::size_t i = 0; i < l1.order.size(); ++i) mapping[static_cast<std::size_t>(l1.order[i])] = l2.order[i];
  return mapping;
}

IsomorphismResult are_isomorphic(const Graph& g1, const Graph& g2, const CanonOptions& options) {
  if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count()) return {};
  const auto l1 = canonical_labeling(g1, options);
  const auto l2 = canonical_labeling(g2, options);
  if (l1.certificate != l2.certificate) return {};
  auto mapping = mapping_from_labelings(l1, l2);
  if (!is_isomorphism(g1, g2, mapping)) throw std::logic_error("canonical labelings produced an invalid isomorphism");
  return {true, std::move(mapping)};
}

}  // namespace drgcay
