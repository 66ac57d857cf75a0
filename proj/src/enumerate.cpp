#include "tol/enumerate.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <span>
#include <string>
#include <thread>

#include "tol/clauses.hpp"
#include "tol/sweep.hpp"

namespace tol {

namespace {

void validate_spec(const SearchSpec& spec) {
  if (spec.n < 1) throw DomainError("search needs n >= 1");
  for (AxiomId ax : spec.require)
    if (spec.forbid.count(ax))
      throw DomainError("axiom " + std::string(axiom_name(ax)) +
                        " is both required and forbidden");
}

// Order used everywhere a "first" or "canonical" mask is needed: compare
// the membership bit sequences, absent-before-present at the first
// differing index. Matches TernaryRelation's operator<.
inline bool bitlex_less(std::uint32_t a, std::uint32_t b) {
  const std::uint32_t d = a ^ b;
  if (!d) return false;
  return (a & (d & (~d + 1))) == 0;
}

// Bit permutation tables for all n! relabelings of a packed triple space.
std::vector<std::vector<int>> relabeling_tables(const clauses::TripleSpace& space) {
  std::vector<Point> img(static_cast<size_t>(space.n()));
  std::iota(img.begin(), img.end(), 0);
  std::vector<std::vector<int>> tables;
  do {
    std::vector<int> table(static_cast<size_t>(space.bits()));
    for (int i = 0; i < space.bits(); ++i) {
      const Triple t = space.triple_at(i);
      table[static_cast<size_t>(i)] =
          space.index({img[static_cast<size_t>(t.a)], img[static_cast<size_t>(t.b)],
                       img[static_cast<size_t>(t.c)]});
    }
    tables.push_back(std::move(table));
  } while (std::next_permutation(img.begin(), img.end()));
  return tables;
}

std::uint32_t canonical_mask(std::uint32_t mask,
                             const std::vector<std::vector<int>>& tables) {
  std::uint32_t best = mask;
  for (const auto& table : tables) {
    std::uint32_t relabeled = 0;
    std::uint32_t rest = mask;
    while (rest) {
      const int bit = std::countr_zero(rest);
      rest &= rest - 1;
      relabeled |= std::uint32_t{1} << table[static_cast<size_t>(bit)];
    }
    if (bitlex_less(relabeled, best)) best = relabeled;
  }
  return best;
}

sweep::Job compile_job(const SearchSpec& spec, const clauses::TripleSpace& space) {
  sweep::Job job;
  for (AxiomId ax : spec.require) job.require.push_back(sweep::compile(ax, space));
  for (AxiomId ax : spec.forbid) job.forbid.push_back(sweep::compile(ax, space));
  return job;
}

clauses::TripleSpace raw_space(const SearchSpec& spec) {
  auto space = spec.distinct_triples_only ? clauses::TripleSpace::distinct(spec.n)
                                          : clauses::TripleSpace::full(spec.n);
  if (space.bits() > 25)
    throw DomainError("search space too large: 2^" + std::to_string(space.bits()) +
                      " relations on " + std::to_string(spec.n) + " points");
  return space;
}

// ---------------------------------------------------------------------------
// Pruned 3-set-state engine.

// The five member-set states a 3-set can take under axioms B, C, D, F,
// as bit masks over the local triple order [abc, acb, bac, bca, cab, cba]
// for a < b < c. Three symmetric states, then the two cyclic ones.
constexpr std::array<std::uint8_t, 5> kThreeSetStates = {
    0b100001,  // {abc, cba}
    0b001010,  // {acb, bca}
    0b010100,  // {bac, cab}
    0b011001,  // {abc, bca, cab}
    0b100110,  // {acb, bac, cba}
};
// With B required, every model can be relabeled inside its first 3-set so
// that the state there is the representative of its orbit; branching the
// root level over one symmetric and one cyclic state is therefore sound.
constexpr std::array<std::uint8_t, 2> kRootStates = {0b100001, 0b011001};

struct EngineClause {
  std::vector<int> hyp, concl;
};

class Engine {
 public:
  Engine(const SearchSpec& spec, const clauses::TripleSpace& space)
      : spec_(spec), space_(space) {
    build_three_sets();
    build_buckets();
    words_.assign((static_cast<size_t>(space_.bits()) + 63) / 64, 0);
  }

  // Runs the subtree under a fixed prefix of root-level states, calling the
  // sink on every surviving leaf. Sink returns false to stop.
  bool run_prefix(std::span<const std::uint8_t> prefix,
                  const std::function<bool(const TernaryRelation&)>& sink) {
    std::fill(words_.begin(), words_.end(), 0);
    sink_ = &sink;
    return descend_prefix(prefix, 0);
  }

  int levels() const { return static_cast<int>(three_sets_.size()); }

  // Root-level branching tasks for the worker split: state tuples for the
  // first one or two levels.
  std::vector<std::vector<std::uint8_t>> root_tasks() const {
    std::vector<std::vector<std::uint8_t>> tasks;
    if (levels() == 0) return tasks;
    for (std::uint8_t s0 : kRootStates) {
      if (levels() == 1) {
        tasks.push_back({s0});
        continue;
      }
      for (std::uint8_t s1 : kThreeSetStates) tasks.push_back({s0, s1});
    }
    return tasks;
  }

 private:
  void build_three_sets() {
    const int n = spec_.n;
    // Point-incremental order: every 3-set inside {0..k} precedes any 3-set
    // containing k+1, so clause support completes as early as possible.
    for (Point c = 2; c < n; ++c)
      for (Point b = 1; b < c; ++b)
        for (Point a = 0; a < b; ++a) {
          const Triple t{a, b, c};
          std::array<int, 6> bits = {
              space_.index(t),      space_.index(acb(t)), space_.index(bac(t)),
              space_.index(bca(t)), space_.index(cab(t)), space_.index(cba(t))};
          three_sets_.push_back(bits);
          ordinal_[key(a, b, c)] = static_cast<int>(three_sets_.size()) - 1;
        }
  }

  int key(Point a, Point b, Point c) const {
    return (a * spec_.n + b) * spec_.n + c;  // a < b < c
  }

  int ordinal_of_triple(Triple t) const {
    std::array<Point, 3> s = {t.a, t.b, t.c};
    std::sort(s.begin(), s.end());
    return ordinal_.at(key(s[0], s[1], s[2]));
  }

  void build_buckets() {
    buckets_.resize(three_sets_.size());
    for (AxiomId ax : spec_.require) {
      if (ax == AxiomId::B || ax == AxiomId::C || ax == AxiomId::D || ax == AxiomId::F)
        continue;  // already enforced by the state catalog
      for (const clauses::Clause& cl : clauses::compile_axiom(ax, space_)) {
        int last = 0;
        for (int bit : cl.hyp)
          last = std::max(last, ordinal_of_triple(space_.triple_at(bit)));
        for (int bit : cl.concl)
          last = std::max(last, ordinal_of_triple(space_.triple_at(bit)));
        buckets_[static_cast<size_t>(last)].push_back({cl.hyp, cl.concl});
      }
    }
  }

  bool bit(int i) const { return (words_[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1; }

  void apply_state(int level, std::uint8_t state) {
    for (int k = 0; k < 6; ++k)
      if ((state >> k) & 1) {
        const int i = three_sets_[static_cast<size_t>(level)][static_cast<size_t>(k)];
        words_[static_cast<size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63);
      }
  }

  void clear_state(int level, std::uint8_t state) {
    for (int k = 0; k < 6; ++k)
      if ((state >> k) & 1) {
        const int i = three_sets_[static_cast<size_t>(level)][static_cast<size_t>(k)];
        words_[static_cast<size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63));
      }
  }

  bool bucket_ok(int level) const {
    for (const EngineClause& cl : buckets_[static_cast<size_t>(level)]) {
      bool fires = true;
      for (int i : cl.hyp)
        if (!bit(i)) {
          fires = false;
          break;
        }
      if (!fires) continue;
      for (int i : cl.concl)
        if (bit(i)) {
          fires = false;
          break;
        }
      if (fires) return false;
    }
    return true;
  }

  bool descend_prefix(std::span<const std::uint8_t> prefix, int level) {
    if (level < static_cast<int>(prefix.size())) {
      const std::uint8_t s = prefix[static_cast<size_t>(level)];
      apply_state(level, s);
      const bool keep_going = bucket_ok(level) ? descend_prefix(prefix, level + 1) : true;
      clear_state(level, s);
      return keep_going;
    }
    return descend(level);
  }

  bool descend(int level) {
    if (level == levels()) return harvest();
    for (std::uint8_t s : kThreeSetStates) {
      apply_state(level, s);
      const bool keep_going = bucket_ok(level) ? descend(level + 1) : true;
      clear_state(level, s);
      if (!keep_going) return false;
    }
    return true;
  }

  bool harvest() {
    RelationBuilder b(spec_.n);
    for (int i = 0; i < space_.bits(); ++i)
      if (bit(i)) b.add(space_.triple_at(i));
    const TernaryRelation rel = std::move(b).build();
    for (AxiomId ax : spec_.forbid)
      if (holds(rel, ax)) return true;  // fails the forbid filter; keep searching
    return (*sink_)(rel);
  }

  const SearchSpec& spec_;
  const clauses::TripleSpace& space_;
  std::vector<std::array<int, 6>> three_sets_;
  std::map<int, int> ordinal_;
  std::vector<std::vector<EngineClause>> buckets_;
  std::vector<std::uint64_t> words_;
  const std::function<bool(const TernaryRelation&)>* sink_ = nullptr;
};

void validate_engine_spec(const SearchSpec& spec) {
  validate_spec(spec);
  for (AxiomId ax : {AxiomId::B, AxiomId::C, AxiomId::D, AxiomId::F})
    if (!spec.require.count(ax))
      throw DomainError("enumerate_models requires axioms B, C, D and F in the "
                        "required set; use enumerate_raw for other searches");
  if (spec.n > 8)
    throw DomainError("enumerate_models supports n <= 8, got " + std::to_string(spec.n));
}

// First leaf of the engine's deterministic traversal, if any.
std::optional<TernaryRelation> engine_find_first(const SearchSpec& spec) {
  validate_engine_spec(spec);
  const auto space = clauses::TripleSpace::distinct(spec.n);
  Engine engine(spec, space);
  std::optional<TernaryRelation> found;
  const std::function<bool(const TernaryRelation&)> sink =
      [&](const TernaryRelation& rel) {
        found = rel;
        return false;
      };
  for (const auto& task : engine.root_tasks()) {
    if (!engine.run_prefix(task, sink)) break;
  }
  return found;
}

}  // namespace

int default_worker_count() {
  if (const char* env = std::getenv("TOL_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

ModelSet enumerate_raw(const SearchSpec& spec) {
  validate_spec(spec);
  const auto space = raw_space(spec);
  const auto job = compile_job(spec, space);
  const auto tables = relabeling_tables(space);

  std::set<std::uint32_t, decltype(&bitlex_less)> canon(&bitlex_less);
  std::uint64_t total = 0;
  sweep::run(job, std::uint64_t{1} << space.bits(), [&](std::uint32_t mask) {
    ++total;
    canon.insert(canonical_mask(mask, tables));
    return true;
  });

  ModelSet out;
  out.total_before_dedup = total;
  out.models.reserve(canon.size());
  for (std::uint32_t mask : canon) out.models.push_back(space.to_relation(mask));
  return out;
}

ModelSet enumerate_models(const SearchSpec& spec, int workers) {
  validate_engine_spec(spec);
  if (workers <= 0) workers = default_worker_count();
  const auto space = clauses::TripleSpace::distinct(spec.n);

  Engine probe(spec, space);
  const auto tasks = probe.root_tasks();

  if (tasks.empty()) {  // n < 3: only the empty relation exists
    ModelSet out;
    const auto empty = TernaryRelation::empty(spec.n);
    bool ok = std::all_of(spec.require.begin(), spec.require.end(),
                          [&](AxiomId ax) { return holds(empty, ax); }) &&
              std::none_of(spec.forbid.begin(), spec.forbid.end(),
                           [&](AxiomId ax) { return holds(empty, ax); });
    if (ok) {
      out.models.push_back(empty);
      out.total_before_dedup = 1;
    }
    return out;
  }

  std::mutex merge_mutex;
  std::set<TernaryRelation> models;
  std::uint64_t total = 0;
  std::atomic<size_t> next_task{0};

  auto worker_fn = [&]() {
    Engine engine(spec, space);
    std::vector<TernaryRelation> local;
    std::uint64_t local_total = 0;
    const std::function<bool(const TernaryRelation&)> sink =
        [&](const TernaryRelation& rel) {
          ++local_total;
          local.push_back(canonical_form(rel));
          return true;
        };
    for (;;) {
      const size_t t = next_task.fetch_add(1);
      if (t >= tasks.size()) break;
      engine.run_prefix(tasks[t], sink);
    }
    std::lock_guard<std::mutex> lock(merge_mutex);
    total += local_total;
    for (auto& rel : local) models.insert(std::move(rel));
  };

  const int thread_count = std::min<int>(workers, static_cast<int>(tasks.size()));
  std::vector<std::thread> threads;
  threads.reserve(static_cast<size_t>(thread_count));
  for (int i = 0; i < thread_count; ++i) threads.emplace_back(worker_fn);
  for (auto& th : threads) th.join();

  ModelSet out;
  out.total_before_dedup = total;
  out.models.assign(models.begin(), models.end());
  return out;
}

std::optional<TernaryRelation> check_implication(int n,
                                                 const std::set<AxiomId>& antecedents,
                                                 AxiomId consequent) {
  SearchSpec spec;
  spec.n = n;
  spec.require = antecedents;
  spec.forbid = {consequent};
  validate_spec(spec);
  const auto space = raw_space(spec);
  const auto job = compile_job(spec, space);
  std::optional<TernaryRelation> counterexample;
  sweep::run(job, std::uint64_t{1} << space.bits(), [&](std::uint32_t mask) {
    counterexample = space.to_relation(mask);
    return false;
  });
  return counterexample;
}

IndependenceReport independence_witnesses(const std::set<AxiomId>& axiom_set,
                                          int max_n) {
  if (axiom_set.size() < 2)
    throw DomainError("independence needs at least two axioms");
  IndependenceReport report;
  for (AxiomId target : axiom_set) {
    std::set<AxiomId> rest = axiom_set;
    rest.erase(target);
    constexpr std::array<AxiomId, 4> kEngineCore = {AxiomId::B, AxiomId::C, AxiomId::D,
                                                    AxiomId::F};
    const bool engine_ok = std::all_of(kEngineCore.begin(), kEngineCore.end(),
                                       [&](AxiomId ax) { return rest.count(ax) > 0; });

    std::optional<TernaryRelation> found;
    int searched = 0;
    for (int n = 1; n <= max_n && !found; ++n) {
      SearchSpec spec;
      spec.n = n;
      spec.require = rest;
      spec.forbid = {target};
      if (n <= 2) {
        spec.distinct_triples_only = false;  // D can only fail with repeats
        const auto space = raw_space(spec);
        const auto job = compile_job(spec, space);
        sweep::run(job, std::uint64_t{1} << space.bits(), [&](std::uint32_t mask) {
          found = space.to_relation(mask);
          return false;
        });
      } else if (n <= 4) {
        const auto space = raw_space(spec);
        const auto job = compile_job(spec, space);
        sweep::run(job, std::uint64_t{1} << space.bits(), [&](std::uint32_t mask) {
          found = space.to_relation(mask);
          return false;
        });
      } else if (n <= 8 && engine_ok) {
        found = engine_find_first(spec);
      } else {
        break;  // this and all larger sizes are out of reach
      }
      searched = n;
    }
    report.witnesses[target] = found ? std::optional(canonical_form(*found)) : std::nullopt;
    report.searched_up_to[target] = searched;
  }
  return report;
}

}  // namespace tol
