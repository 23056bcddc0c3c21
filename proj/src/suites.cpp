#include "midlayer/suites.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "midlayer/analysis.hpp"
#include "midlayer/construct.hpp"
#include "midlayer/lattice.hpp"
#include "midlayer/trees.hpp"

namespace midlayer {

void SuiteReport::expect(bool ok, const std::string& what) {
  ++checks;
  if (!ok && failures.size() < 50) failures.push_back(what);
}

namespace {

using Paths = std::vector<LatticePath>;

Paths suffixed(const Paths& ps, std::string_view tail) {
  const LatticePath t = LatticePath::parse(tail);
  Paths out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.push_back(p.then(t));
  return out;
}

void add(Paths& into, const Paths& more) { into.insert(into.end(), more.begin(), more.end()); }

// Checks that the parts are pairwise disjoint and their union is `whole`.
void expect_partition(SuiteReport& r, Paths parts, const Paths& whole, const std::string& label) {
  std::sort(parts.begin(), parts.end());
  r.expect(std::adjacent_find(parts.begin(), parts.end()) == parts.end(), label + ": union is not disjoint");
  r.expect(parts == whole, label + ": union differs from the enumerated set");
}

ParameterSequence random_sequence(std::mt19937_64& rng, int n) {
  std::vector<AlphaVector> a;
  for (int i = 1; i <= n; ++i) a.emplace_back(rng() & bits::low_mask(i - 1), i);
  return ParameterSequence(std::move(a));
}

std::uint64_t pairs(int d) { return d < 1 ? 0 : static_cast<std::uint64_t>(d) * static_cast<std::uint64_t>(d - 1) / 2; }

// Every sequence of length n when there are at most `limit`, otherwise
// `limit` random ones (the all-zero sequence first).
std::vector<ParameterSequence> sequences(int n, std::uint64_t limit, std::mt19937_64& rng, bool* exhaustive) {
  std::vector<ParameterSequence> out;
  if (n == 0) {
    out.emplace_back();
    if (exhaustive) *exhaustive = true;
    return out;
  }
  if (pairs(n) < 63 && (std::uint64_t{1} << pairs(n)) <= limit) {
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << pairs(n)); ++i) out.push_back(ParameterSequence::from_index(i, n));
    if (exhaustive) *exhaustive = true;
    return out;
  }
  out.push_back(ParameterSequence::all_zero(n));
  while (out.size() < limit) out.push_back(random_sequence(rng, n));
  if (exhaustive) *exhaustive = false;
  return out;
}

std::string lvl(int n) { return "n=" + std::to_string(n); }

}  // namespace

SuiteReport lattice_suite(int recursion_len, int invariance_len) {
  SuiteReport r;
  r.name = "lattice";
  auto E = [](int len, int k, PathTag t) { return enumerate_class(len, k, t); };

  for (int n = 1; 2 * n + 2 <= recursion_len; ++n) {
    const int m = 2 * n, m2 = 2 * n + 2;
    for (PathTag t : {PathTag::DEq0, PathTag::DMinus}) {
      for (int k = n + 2; k <= 2 * n + 1; ++k) {
        Paths u;
        add(u, suffixed(E(m, k, t), "DD"));
        add(u, suffixed(E(m, k - 1, t), "UD"));
        add(u, suffixed(E(m, k - 1, t), "DU"));
        add(u, suffixed(E(m, k - 2, t), "UU"));
        expect_partition(r, u, E(m2, k, t),
                         "upper recursion " + std::string(to_string(t)) + " " + lvl(n) + " k=" + std::to_string(k));
      }
    }
    for (int k = n + 2; k <= 2 * n + 1; ++k) {
      Paths u;
      add(u, suffixed(E(m, k + 1, PathTag::DGt0), "DD"));
      add(u, suffixed(E(m, k, PathTag::DGt0), "UD"));
      add(u, suffixed(E(m, k, PathTag::DGt0), "DU"));
      add(u, suffixed(E(m, k - 1, PathTag::DGt0), "UU"));
      expect_partition(r, u, E(m2, k + 1, PathTag::DGt0), "upper recursion D_GT0 " + lvl(n) + " k=" + std::to_string(k));
    }
    {
      Paths u;
      add(u, suffixed(E(m, n + 1, PathTag::DEq0), "DD"));
      add(u, suffixed(E(m, n + 1, PathTag::DGt0), "DD"));
      add(u, suffixed(E(m, n, PathTag::DEq0), "UD"));
      expect_partition(r, u, E(m2, n + 1, PathTag::DEq0), "middle recursion D_EQ0 " + lvl(n));
    }
    {
      Paths u;
      add(u, suffixed(E(m, n + 2, PathTag::DGt0), "DD"));
      add(u, suffixed(E(m, n + 1, PathTag::DGt0), "UD"));
      add(u, suffixed(E(m, n + 1, PathTag::DGt0), "DU"));
      expect_partition(r, u, E(m2, n + 2, PathTag::DGt0), "middle recursion D_GT0 " + lvl(n));
    }
    {
      Paths u;
      add(u, suffixed(E(m, n + 1, PathTag::DMinus), "DD"));
      add(u, suffixed(E(m, n, PathTag::DMinus), "UD"));
      add(u, suffixed(E(m, n, PathTag::DEq0), "DU"));
      expect_partition(r, u, E(m2, n + 1, PathTag::DMinus), "middle recursion D_MINUS " + lvl(n));
    }
  }

  for (int n = 1; 2 * n <= invariance_len; ++n) {
    const Paths eq0 = E(2 * n, n, PathTag::DEq0);
    const Paths minus = E(2 * n, n, PathTag::DMinus);
    for (std::uint64_t rank = 0; rank < (std::uint64_t{1} << (n - 1)); ++rank) {
      const AlphaVector a = AlphaVector::from_rank(rank, n);
      const std::string where = lvl(n) + " alpha=" + a.str();
      Paths img;
      for (const auto& p : eq0) img.push_back(f_alpha_path(a, p));
      std::sort(img.begin(), img.end());
      r.expect(img == eq0, "f_alpha does not map D_EQ0 onto itself, " + where);
      img.clear();
      for (const auto& p : minus) {
        const LatticePath q = f_alpha_path(a, p);
        img.push_back(q);
        if (classify(q).tag == PathTag::DMinus) {
          r.expect(decompose(q).pivot == 2 * n - decompose(p).pivot, "mirror pivot fails for " + p.str() + ", " + where);
        }
      }
      std::sort(img.begin(), img.end());
      r.expect(img == minus, "f_alpha does not map D_MINUS onto itself, " + where);
    }
  }

  std::uint64_t recomposed = 0;
  for (int len = 0; len <= recursion_len; ++len) {
    for (Word w = 0; w < (Word{1} << len); ++w) {
      const LatticePath p(w, len);
      const PathClass c = classify(p);
      if (c.tag == PathTag::None) continue;
      Decomposition d;
      try {
        d = decompose(p);
      } catch (const std::invalid_argument&) {
        continue;  // pivot steps do not fit (e.g. a D_GT0 path ending at height 1)
      }
      ++recomposed;
      r.expect(recompose(c.tag, d.ell, d.r) == p, "recomposition fails for " + p.str());
    }
  }
  r.note("recomposed " + std::to_string(recomposed) + " classified paths");

  for (int n = 1; n <= 10; ++n) {
    r.expect(E(2 * n, n, PathTag::DEq0).size() == catalan(n), "|D_EQ0(2n,n)| != Catalan at " + lvl(n));
  }
  return r;
}

TreeCounts brute_force_tree_counts(int edges) {
  TreeCounts c;
  std::map<PlaneTreeCode, std::size_t> classes;
  for (const auto& p : enumerate_class(2 * edges, edges, PathTag::DEq0)) {
    ++c.ordered;
    const RootedTree t = psi(p);
    const PlaneTreeCode code = canonical_plane_tree(t);
    if (!classes.count(code)) classes[code] = rotation_class(t).size();
  }
  c.plane = classes.size();
  for (const auto& [code, size] : classes) {
    if (size == static_cast<std::size_t>(2 * edges)) ++c.asymmetric;
  }
  return c;
}

SuiteReport trees_suite(int max_edges, int psi_len) {
  SuiteReport r;
  r.name = "trees";
  std::uint64_t trees = 0;
  for (int len = 0; len <= psi_len; ++len) {
    for (Word w = 0; w < (Word{1} << len); ++w) {
      const LatticePath p(w, len);
      if (!is_nonnegative(p)) continue;
      const RootedTree t = psi(p);
      ++trees;
      r.expect(psi_inv(t) == p, "psi_inv(psi(p)) != p for " + p.str());
      r.expect(psi(psi_inv(t)) == t, "psi(psi_inv(t)) != t for " + p.str());
      r.expect(t.vertex_count() == p.upsteps() + 1, "vertex count for " + p.str());
      r.expect(t.depth(t.active()) == 2 * p.upsteps() - len, "active depth for " + p.str());
    }
  }
  r.note("psi round trips: " + std::to_string(trees));

  for (int e = 1; e <= max_edges; ++e) {
    std::map<PlaneTreeCode, std::uint64_t> members;
    std::map<PlaneTreeCode, std::size_t> class_size;
    for (const auto& p : enumerate_class(2 * e, e, PathTag::DEq0)) {
      const RootedTree t = psi(p);
      const PlaneTreeCode code = canonical_plane_tree(t);
      ++members[code];
      const std::size_t size = rotation_class(t).size();
      auto [it, fresh] = class_size.emplace(code, size);
      r.expect(fresh || it->second == size, "class sizes disagree within one code at " + std::to_string(e) + " edges");
      r.expect((2 * e) % static_cast<int>(size) == 0, "class size does not divide 2n");
      RootedTree u = t;
      for (int i = 0; i < 2 * e; ++i) u = rotate(u);
      r.expect(u == t, "rotating 2n times does not return the tree " + p.str());
    }
    std::uint64_t total = 0, full = 0;
    for (const auto& [code, count] : members) {
      total += count;
      r.expect(count == class_size[code], "code " + code.str() + " groups " + std::to_string(count) +
                                              " trees but its class has " + std::to_string(class_size[code]));
      if (class_size[code] == static_cast<std::size_t>(2 * e)) ++full;
    }
    const std::string where = std::to_string(e) + " edges";
    r.expect(total == catalan(e), "class sizes do not sum to Catalan at " + where);
    r.expect(members.size() == count_plane_trees(e), "plane tree count mismatch at " + where);
    r.expect(full == count_asymmetric(e), "asymmetric tree count mismatch at " + where);
    r.note("plane trees with " + where + ": " + std::to_string(members.size()) + " (" + std::to_string(full) +
           " asymmetric)");
  }

  const std::uint64_t cat[] = {1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
  const std::uint64_t plane[] = {1, 1, 2, 3, 6, 14, 34, 95, 280, 854};
  const std::uint64_t asym[] = {0, 0, 0, 1, 3, 9, 28, 85, 262, 827};
  for (int i = 1; i <= 10; ++i) {
    r.expect(catalan(i) == cat[i - 1], "catalan(" + std::to_string(i) + ")");
    r.expect(count_plane_trees(i) == plane[i - 1], "count_plane_trees(" + std::to_string(i) + ")");
    r.expect(count_asymmetric(i) == asym[i - 1], "count_asymmetric(" + std::to_string(i) + ")");
  }
  return r;
}

SuiteReport lemmas_suite(int n_max, std::uint64_t samples, std::uint64_t seed, int all_zero_max) {
  SuiteReport r;
  r.name = "lemmas";
  std::mt19937_64 rng(seed);
  for (int n = 1; n <= n_max; ++n) {
    const int m = 2 * n;
    bool exhaustive = false;
    const auto prefixes = sequences(n - 1, samples, rng, &exhaustive);
    std::map<int, std::vector<std::size_t>> reference_lengths;
    std::map<int, std::vector<LatticePath>> want_f, want_s, want_l;
    for (int k = n; k <= 2 * n - 1; ++k) {
      want_f[k] = enumerate_class(m, k, PathTag::DEq0);
      want_s[k] = enumerate_class(m, k + 1, PathTag::DGt0);
      want_l[k] = enumerate_class(m, k, PathTag::DMinus);
    }
    for (const auto& prefix : prefixes) {
      const ConstructionState state = build_state(prefix);
      const std::string where = lvl(n) + " prefix=" + prefix.str();
      for (const auto& p : check_state(state)) r.expect(false, where + ": " + p);

      for (int k = state.k_min(); k <= state.k_max(); ++k) {
        const FslSets fsl = fsl_sets(state, k);
        auto images = [](const std::vector<Bitstring>& xs) {
          std::vector<LatticePath> out;
          for (const auto& x : xs) out.push_back(phi(x));
          std::sort(out.begin(), out.end());
          return out;
        };
        const std::string wk = where + " k=" + std::to_string(k);
        r.expect(images(fsl.first) == want_f[k], "phi(F) != D_EQ0, " + wk);
        r.expect(images(fsl.second) == want_s[k], "phi(S) != D_GT0, " + wk);
        r.expect(images(fsl.last) == want_l[k], "phi(L) != D_MINUS, " + wk);

        const PathFamily& fam = state.family(k);
        std::vector<std::size_t> lengths;
        for (std::size_t i = 0; i < fam.size(); ++i) {
          const Decomposition dF = decompose(phi(Bitstring(fam.first(i), m)));
          const Decomposition dS = decompose(phi(Bitstring(fam.second(i), m)));
          const Decomposition dL = decompose(phi(Bitstring(fam.last(i), m)));
          const std::string wp = wk + " path " + std::to_string(i);
          r.expect(fam.edges(i) == static_cast<std::size_t>(2 * dF.ell.size() + 2), "path length formula, " + wp);
          r.expect(dF.ell == dS.ell && dF.r == dS.r, "FS relation, " + wp);
          r.expect(dS.ell.size() == dL.ell.size() && dS.r.size() == dL.r.size(), "SL length relation, " + wp);
          lengths.push_back(fam.edges(i));
        }
        std::sort(lengths.begin(), lengths.end());
        auto [it, fresh] = reference_lengths.emplace(k, lengths);
        r.expect(fresh || it->second == lengths, "path lengths depend on alpha, " + wk);
      }

      const PathFamily& mid = state.family(n);
      std::vector<Word> fs, ls;
      for (std::size_t i = 0; i < mid.size(); ++i) {
        fs.push_back(mid.first(i));
        ls.push_back(mid.last(i));
      }
      std::sort(fs.begin(), fs.end());
      std::sort(ls.begin(), ls.end());
      for (std::uint64_t rank = 0; rank < (std::uint64_t{1} << (n - 1)); ++rank) {
        const AlphaVector a = AlphaVector::from_rank(rank, n);
        auto mapped = [&](const std::vector<Word>& xs) {
          std::vector<Word> out;
          for (Word x : xs) out.push_back(bits::f_map(x, a.swap_mask(), m));
          std::sort(out.begin(), out.end());
          return out;
        };
        r.expect(mapped(fs) == fs, "f_alpha does not preserve F, " + where + " alpha=" + a.str());
        r.expect(mapped(ls) == ls, "f_alpha does not preserve L, " + where + " alpha=" + a.str());
      }
    }
    r.note(lvl(n) + ": " + std::to_string(prefixes.size()) + (exhaustive ? " prefixes (all)" : " prefixes (sampled)"));
  }

  for (int n = 1; n <= all_zero_max; ++n) {
    const ConstructionState state = build_state(ParameterSequence::all_zero(n - 1));
    const int m = 2 * n;
    for (int k = state.k_min(); k <= state.k_max(); ++k) {
      const PathFamily& fam = state.family(k);
      for (std::size_t i = 0; i < fam.size(); ++i) {
        const Decomposition dS = decompose(phi(Bitstring(fam.second(i), m)));
        const Decomposition dL = decompose(phi(Bitstring(fam.last(i), m)));
        r.expect(dS.ell == dL.ell && dS.r == dL.r,
                 "all-zero SL relation, " + lvl(n) + " k=" + std::to_string(k) + " path " + std::to_string(i));
      }
    }
  }
  if (all_zero_max > 0) r.note("all-zero SL relation checked for n <= " + std::to_string(all_zero_max));
  return r;
}

SuiteReport parity_suite(int n, std::uint64_t budget, std::uint64_t seed) {
  SuiteReport r;
  r.name = "parity";
  std::mt19937_64 rng(seed);
  std::map<std::uint64_t, std::uint64_t> hist;
  std::uint64_t evaluated = 0;
  auto check = [&](const PathPairing& pp, const ParameterSequence& prefix, const AlphaVector& a) {
    const std::uint64_t c = pp.count_cycles(a);
    ++hist[c];
    ++evaluated;
    r.expect(static_cast<int>(c % 2) == predicted_parity(a, n),
             "parity mismatch for " + prefix.extended(a).str() + " (" + std::to_string(c) + " cycles)");
  };
  const bool exhaustive = pairs(n) < 63 && (std::uint64_t{1} << pairs(n)) <= budget;
  if (exhaustive) {
    bool all = false;
    for (const auto& prefix : sequences(n - 1, ~std::uint64_t{0}, rng, &all)) {
      const PathPairing pp(build_state(prefix, n));
      for (std::uint64_t rank = 0; rank < (std::uint64_t{1} << (n - 1)); ++rank) {
        check(pp, prefix, AlphaVector::from_rank(rank, n));
      }
    }
  } else {
    for (std::uint64_t i = 0; i < budget; ++i) {
      const ParameterSequence seq = random_sequence(rng, n);
      const PathPairing pp(build_state(seq.prefix(n - 1), n));
      check(pp, seq.prefix(n - 1), seq.last());
    }
  }
  std::string h;
  for (const auto& [c, k] : hist) h += " " + std::to_string(c) + ":" + std::to_string(k);
  r.note(lvl(n) + ", " + std::to_string(evaluated) + (exhaustive ? " sequences (all)" : " sampled sequences") +
         ", cycle counts" + h);
  return r;
}

SuiteReport tau_suite(int n_max, std::uint64_t budget, std::uint64_t seed) {
  SuiteReport r;
  r.name = "tau";
  std::mt19937_64 rng(seed);
  for (int n = 1; n <= n_max; ++n) {
    bool exhaustive = false;
    const auto seqs = sequences(n, budget, rng, &exhaustive);
    for (const auto& seq : seqs) {
      const AlphaVector rev = seq.last().reversed();
      const ParameterSequence other = seq.prefix(n - 1).extended(rev);
      r.expect(same_edges(tau_image(build(seq, n), rev), build(other, n)),
               "tau does not map " + seq.str() + " onto " + other.str());
    }
    r.note(lvl(n) + ": " + std::to_string(seqs.size()) + (exhaustive ? " sequences (all)" : " sampled sequences"));
  }
  return r;
}

SuiteReport distinct_suite(int n, std::uint64_t budget, std::uint64_t seed) {
  SuiteReport r;
  r.name = "distinct";
  std::mt19937_64 rng(seed);
  if (pairs(n) < 63 && (std::uint64_t{1} << pairs(n)) <= budget) {
    bool all = false;
    const auto seqs = sequences(n, budget, rng, &all);
    r.expect(distinct_check(n, seqs), "two sequences at " + lvl(n) + " give the same 2-factor");
    r.note(lvl(n) + ": " + std::to_string(seqs.size()) + " sequences (all) pairwise distinct");
    return r;
  }
  // A pool of m distinct sequences yields m(m-1)/2 >= budget compared pairs.
  std::size_t pool_size = 2;
  while (pool_size * (pool_size - 1) / 2 < budget) ++pool_size;
  std::vector<ParameterSequence> pool;
  std::set<std::string> seen;
  while (pool.size() < pool_size) {
    ParameterSequence s = random_sequence(rng, n);
    if (seen.insert(s.str()).second) pool.push_back(std::move(s));
  }
  r.expect(distinct_check(n, pool), "two sampled sequences at " + lvl(n) + " give the same 2-factor");
  r.note(lvl(n) + ": " + std::to_string(pool_size * (pool_size - 1) / 2) + " random pairs distinct");
  return r;
}

SuiteReport divisibility_suite(int n, std::uint64_t samples, std::uint64_t seed) {
  SuiteReport r;
  r.name = "divisibility";
  std::mt19937_64 rng(seed);
  const std::uint64_t period = 4 * static_cast<std::uint64_t>(n) + 2;
  for (std::uint64_t i = 0; i < samples; ++i) {
    const ParameterSequence seq = random_sequence(rng, n);
    const TwoFactor tf = build(seq, n);
    const VerificationReport v = verify_two_factor(tf);
    r.expect(v.ok(), "invalid 2-factor for " + seq.str() + (v.failures.empty() ? "" : ": " + v.failures.front()));
    const CycleSpectrum s = spectrum(tf);
    for (std::size_t c = 0; c < tf.cycles.size(); ++c) {
      r.expect(tf.cycles[c].size() == period * s.dyck_counts[c],
               "cycle " + std::to_string(c) + " of " + seq.str() + " has length " + std::to_string(tf.cycles[c].size()) +
                   " with " + std::to_string(s.dyck_counts[c]) + " Dyck vertices");
    }
  }
  r.note(lvl(n) + ": " + std::to_string(samples) + " sampled sequences");
  return r;
}

SuiteReport all_zero_suite(int n_max) {
  SuiteReport r;
  r.name = "all-zero";
  for (int n = 1; n <= n_max; ++n) {
    const TwoFactor tf = build(ParameterSequence::all_zero(n), n);
    const VerificationReport v = verify_two_factor(tf);
    r.expect(v.ok(), "invalid all-zero 2-factor at " + lvl(n));
    const CycleSpectrum s = spectrum(tf);
    const std::uint64_t period = 4 * static_cast<std::uint64_t>(n) + 2;
    r.expect(s.num_cycles() == count_plane_trees(n), "cycle count != plane trees at " + lvl(n));
    if (n >= 2) r.expect(s.shortest() == 2 * period, "shortest cycle at " + lvl(n));
    if (n >= 4) {
      r.expect(s.longest() == 2 * static_cast<std::uint64_t>(n) * period, "longest cycle at " + lvl(n));
      r.expect(s.count_of(s.longest()) == count_asymmetric(n), "number of longest cycles at " + lvl(n));
    }
    std::set<PlaneTreeCode> codes;
    for (std::size_t c = 0; c < tf.cycles.size(); ++c) {
      try {
        codes.insert(cycle_tree_class(tf.cycles[c], n));
      } catch (const InvariantViolation& e) {
        r.expect(false, lvl(n) + " cycle " + std::to_string(c) + ": " + e.what());
      }
    }
    r.expect(codes.size() == tf.cycles.size(), "cycles map to repeated plane trees at " + lvl(n));
    r.note(lvl(n) + ": " + std::to_string(s.num_cycles()) + " cycles, lengths " + std::to_string(s.shortest()) + ".." +
           std::to_string(s.longest()));
  }
  return r;
}

}  // namespace midlayer
