#include "midlayer/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

#include "json.hpp"
#include "midlayer/construct.hpp"

namespace midlayer {

using nlohmann::json;

std::string_view to_string(SearchMode mode) {
  switch (mode) {
    case SearchMode::Exhaustive: return "exhaustive";
    case SearchMode::Random: return "random";
    case SearchMode::Targeted: return "targeted";
  }
  return "?";
}

SearchMode parse_search_mode(std::string_view text) {
  if (text == "exhaustive") return SearchMode::Exhaustive;
  if (text == "random") return SearchMode::Random;
  if (text == "targeted") return SearchMode::Targeted;
  throw ParseError("unknown search mode '" + std::string(text) + "'");
}

void SearchJob::validate() const {
  if (n < 1 || 2 * n + 1 > kMaxBits) throw std::invalid_argument("n must lie in 1..31");
  if (workers < 1) throw std::invalid_argument("workers must be positive");
  switch (mode) {
    case SearchMode::Exhaustive:
      if (n > exhaustive_bound) {
        throw std::invalid_argument("exhaustive search limited to n <= " + std::to_string(exhaustive_bound));
      }
      if (checkpoint > ParameterSequence::space_size(n)) throw std::invalid_argument("checkpoint beyond the space");
      break;
    case SearchMode::Targeted:
      if (targets.empty()) throw std::invalid_argument("targeted search needs at least one target count");
      [[fallthrough]];
    case SearchMode::Random:
      if (!seed) throw std::invalid_argument(std::string(to_string(mode)) + " search needs a seed");
      break;
  }
}

std::string SearchResultRecord::to_json() const {
  json spec = json::object();
  for (const auto& [len, count] : spectrum.counts) spec[std::to_string(len)] = count;
  json j = {{"n", spectrum.n},
            {"alpha", alpha.str()},
            {"num_cycles", num_cycles()},
            {"spectrum", std::move(spec)},
            {"wall_ms", wall_ms}};
  if (seed) j["seed"] = *seed;
  return j.dump();
}

SearchResultRecord SearchResultRecord::from_json(std::string_view line) {
  try {
    const json j = json::parse(line);
    SearchResultRecord r;
    r.alpha = ParameterSequence::parse(j.at("alpha").get<std::string>());
    r.spectrum.n = j.at("n").get<int>();
    for (const auto& [len, count] : j.at("spectrum").items()) {
      r.spectrum.counts[std::stoull(len)] = count.get<std::uint64_t>();
    }
    if (r.spectrum.num_cycles() != j.at("num_cycles").get<std::uint64_t>()) {
      throw ParseError("num_cycles disagrees with spectrum");
    }
    r.wall_ms = j.at("wall_ms").get<std::uint64_t>();
    if (j.contains("seed")) r.seed = j.at("seed").get<std::uint64_t>();
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed search record: ") + e.what());
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const ParseError*>(&e)) throw;
    throw ParseError(std::string("malformed search record: ") + e.what());
  }
}

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t elapsed_ms(Clock::time_point start) {
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count());
}

std::uint64_t pairs(int d) { return static_cast<std::uint64_t>(d) * static_cast<std::uint64_t>(d - 1) / 2; }

void check_parity(std::uint64_t cycles, const AlphaVector& alpha, int n, const ParameterSequence* seq) {
  if (static_cast<int>(cycles % 2) != predicted_parity(alpha, n)) {
    throw InvariantViolation("cycle count " + std::to_string(cycles) + " contradicts the predicted parity" +
                             (seq ? " for " + seq->str() : std::string()));
  }
}

bool wanted(const SearchJob& job, std::uint64_t cycles) {
  return job.targets.empty() || job.targets.count(cycles) > 0;
}

// Thrown by a worker after another worker hit the record limit.
struct Stop {};

class ExhaustiveRunner {
 public:
  ExhaustiveRunner(const SearchJob& job, const RecordSink& sink)
      : job_(job), sink_(sink), n_(job.n), total_bits_(pairs(job.n)), start_(Clock::now()) {}

  SearchSummary run() {
    int depth = 0;
    while (depth < n_ - 1 && (std::uint64_t{1} << pairs(depth)) < static_cast<std::uint64_t>(job_.workers)) {
      ++depth;
    }
    const std::uint64_t roots = std::uint64_t{1} << pairs(depth);
    const int workers = static_cast<int>(std::min<std::uint64_t>(roots, static_cast<std::uint64_t>(job_.workers)));

    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    auto work = [&](int w) {
      try {
        for (std::uint64_t p = static_cast<std::uint64_t>(w); p < roots; p += static_cast<std::uint64_t>(workers)) {
          if (range_end(depth, p) <= job_.checkpoint) continue;
          const ConstructionState state =
              depth == 0 ? base_state(n_) : build_state(ParameterSequence::from_index(p, depth), n_);
          visit(state, depth, p);
        }
      } catch (const Stop&) {
      } catch (...) {
        errors[static_cast<std::size_t>(w)] = std::current_exception();
        stop_.store(true);
      }
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::thread> threads;
      for (int w = 0; w < workers; ++w) threads.emplace_back(work, w);
      for (auto& t : threads) t.join();
    }
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
    summary_.next_checkpoint = std::max(job_.checkpoint, max_index_ + 1);
    if (!summary_.stopped_by_limit) summary_.next_checkpoint = std::uint64_t{1} << total_bits_;
    return summary_;
  }

 private:
  std::uint64_t range_end(int depth, std::uint64_t p) const {
    return (p + 1) << (total_bits_ - pairs(depth));
  }

  // `state` is at level depth + 1; p encodes alpha vectors of levels 1..depth.
  void visit(const ConstructionState& state, int depth, std::uint64_t p) {
    if (stop_.load()) throw Stop{};
    if (depth == n_ - 1) {
      finish(state, p);
      return;
    }
    const int width = depth;  // alpha at level depth+1 has depth entries
    for (std::uint64_t r = 0; r < (std::uint64_t{1} << width); ++r) {
      const std::uint64_t child = (p << width) | r;
      if (range_end(depth + 1, child) <= job_.checkpoint) continue;
      const AlphaVector alpha = AlphaVector::from_rank(r, depth + 1);
      const TwoFactor tf = assemble_two_factor(state, alpha);
      visit(split_state(state, tf, alpha), depth + 1, child);
    }
  }

  void finish(const ConstructionState& state, std::uint64_t p) {
    const PathPairing pairing(state);
    const int width = n_ - 1;
    std::map<std::uint64_t, std::uint64_t> local;
    std::uint64_t evaluated = 0;
    for (std::uint64_t r = 0; r < (std::uint64_t{1} << width); ++r) {
      if (stop_.load()) break;
      const std::uint64_t index = (p << width) | r;
      if (index < job_.checkpoint) continue;
      const AlphaVector alpha = AlphaVector::from_rank(r, n_);
      const std::uint64_t cycles = pairing.count_cycles(alpha);
      check_parity(cycles, alpha, n_, nullptr);
      ++local[cycles];
      ++evaluated;
      if (sink_ && wanted(job_, cycles)) {
        SearchResultRecord rec;
        rec.alpha = ParameterSequence::from_index(index, n_);
        rec.spectrum = spectrum_from_lengths(n_, pairing.evaluate(alpha).lengths);
        emit(rec, index);
      }
    }
    std::lock_guard<std::mutex> lock(mutex_);
    summary_.evaluated += evaluated;
    for (const auto& [c, k] : local) summary_.histogram[c] += k;
  }

  void emit(SearchResultRecord& rec, std::uint64_t index) {
    std::lock_guard<std::mutex> lock(mutex_);
    if (stop_.load()) throw Stop{};
    rec.wall_ms = elapsed_ms(start_);
    sink_(rec);
    ++summary_.hits;
    max_index_ = std::max(max_index_, index);
    if (job_.limit && summary_.hits >= job_.limit) {
      summary_.stopped_by_limit = true;
      stop_.store(true);
    }
  }

  const SearchJob& job_;
  const RecordSink& sink_;
  int n_;
  std::uint64_t total_bits_;
  Clock::time_point start_;
  std::mutex mutex_;
  std::atomic<bool> stop_{false};
  SearchSummary summary_;
  std::uint64_t max_index_ = 0;
};

std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t sample) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(sample), static_cast<std::uint32_t>(sample >> 32)};
  return std::mt19937_64(seq);
}

std::vector<AlphaVector> random_alphas(std::mt19937_64& rng, int levels) {
  std::vector<AlphaVector> alphas;
  for (int i = 1; i <= levels; ++i) alphas.emplace_back(rng() & bits::low_mask(i - 1), i);
  return alphas;
}

struct SampleOutcome {
  std::map<std::uint64_t, std::uint64_t> histogram;
  std::uint64_t evaluated = 0;
  // Candidate records in emission order, each with the number of sequences
  // evaluated up to and including it.
  std::vector<std::pair<SearchResultRecord, std::uint64_t>> records;
};

SampleOutcome random_sample(const SearchJob& job, std::uint64_t sample) {
  auto rng = sample_rng(*job.seed, sample);
  const ParameterSequence seq(random_alphas(rng, job.n));
  const ConstructionState state = build_state(seq.prefix(job.n - 1), job.n);
  const PathPairing pairing(state);
  SampleOutcome out;
  const auto summary = pairing.evaluate(seq.last());
  check_parity(summary.num_cycles, seq.last(), job.n, &seq);
  out.histogram[summary.num_cycles] = 1;
  out.evaluated = 1;
  if (wanted(job, summary.num_cycles)) {
    SearchResultRecord rec;
    rec.alpha = seq;
    rec.spectrum = spectrum_from_lengths(job.n, summary.lengths);
    rec.seed = job.seed;
    out.records.emplace_back(std::move(rec), 1);
  }
  return out;
}

SampleOutcome targeted_sample(const SearchJob& job, std::uint64_t sample) {
  auto rng = sample_rng(*job.seed, sample);
  const ParameterSequence prefix(random_alphas(rng, job.n - 1));
  const ConstructionState state = build_state(prefix, job.n);
  const PathPairing pairing(state);
  SampleOutcome out;
  for (std::uint64_t r = 0; r < (std::uint64_t{1} << (job.n - 1)); ++r) {
    const AlphaVector alpha = AlphaVector::from_rank(r, job.n);
    const std::uint64_t cycles = pairing.count_cycles(alpha);
    check_parity(cycles, alpha, job.n, nullptr);
    ++out.histogram[cycles];
    ++out.evaluated;
    if (job.targets.count(cycles)) {
      SearchResultRecord rec;
      rec.alpha = prefix.extended(alpha);
      rec.spectrum = spectrum_from_lengths(job.n, pairing.evaluate(alpha).lengths);
      rec.seed = job.seed;
      out.records.emplace_back(std::move(rec), out.evaluated);
    }
  }
  return out;
}

SearchSummary run_sampled(const SearchJob& job, const RecordSink& sink) {
  const auto start = Clock::now();
  const std::uint64_t workers = static_cast<std::uint64_t>(job.workers);
  const std::uint64_t batch = workers == 1 ? 1 : 4 * workers;
  const std::uint64_t end = job.checkpoint + job.budget;
  SearchSummary summary;
  summary.next_checkpoint = end;

  for (std::uint64_t base = job.checkpoint; base < end; base += batch) {
    const std::uint64_t count = std::min(batch, end - base);
    std::vector<SampleOutcome> outcomes(count);
    std::vector<std::exception_ptr> errors(count);
    auto work = [&](std::uint64_t w) {
      for (std::uint64_t i = w; i < count; i += workers) {
        try {
          outcomes[i] = job.mode == SearchMode::Random ? random_sample(job, base + i) : targeted_sample(job, base + i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    };
    if (workers == 1 || count == 1) {
      work(0);
    } else {
      std::vector<std::thread> threads;
      for (std::uint64_t w = 0; w < std::min(workers, count); ++w) threads.emplace_back(work, w);
      for (auto& t : threads) t.join();
    }
    // Emit in sample order so the stream does not depend on the worker count.
    for (std::uint64_t i = 0; i < count; ++i) {
      if (errors[i]) std::rethrow_exception(errors[i]);
      auto& o = outcomes[i];
      for (auto& [rec, upto] : o.records) {
        rec.wall_ms = elapsed_ms(start);
        if (sink) sink(rec);
        ++summary.hits;
        if (job.limit && summary.hits >= job.limit) {
          summary.evaluated += upto;
          summary.stopped_by_limit = true;
          summary.next_checkpoint = base + i + 1;
          ++summary.histogram[rec.num_cycles()];
          return summary;
        }
      }
      summary.evaluated += o.evaluated;
      for (const auto& [c, k] : o.histogram) summary.histogram[c] += k;
    }
  }
  return summary;
}

}  // namespace

SearchSummary run_search(const SearchJob& job, const RecordSink& sink) {
  job.validate();
  if (job.mode == SearchMode::Exhaustive) return ExhaustiveRunner(job, sink).run();
  return run_sampled(job, sink);
}

std::map<std::uint64_t, std::uint64_t> cycle_count_histogram(int n, int workers) {
  SearchJob job;
  job.n = n;
  job.workers = workers;
  job.exhaustive_bound = std::max(n, job.exhaustive_bound);
  return run_search(job).histogram;
}

std::optional<Table1Row> expected_table1(int n) {
  // Published counts of parameter sequences yielding 1 and 2 cycles.
  static const Table1Row rows[] = {
      {1, 1, 0}, {2, 1, 1}, {3, 2, 3}, {4, 6, 12}, {5, 44, 100}, {6, 614, 1580}, {7, 0, 113438},
  };
  for (const auto& r : rows) {
    if (r.n == n) return r;
  }
  return std::nullopt;
}

Table1Row table1_row(int n, int workers) {
  const auto hist = cycle_count_histogram(n, workers);
  auto get = [&](std::uint64_t c) {
    auto it = hist.find(c);
    return it == hist.end() ? std::uint64_t{0} : it->second;
  };
  return Table1Row{n, get(1), get(2)};
}

}  // namespace midlayer
