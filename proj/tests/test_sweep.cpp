#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <random>

#include "tol/sweep.hpp"

using namespace tol;

namespace {

// Collect accepted masks over the whole space with a given kernel.
std::vector<std::uint32_t> collect(sweep::Kernel k, const sweep::Job& job,
                                   std::uint64_t count) {
  std::vector<std::uint32_t> out;
  sweep::run_with_kernel(k, job, count, [&](std::uint32_t m) {
    out.push_back(m);
    return true;
  });
  return out;
}

}  // namespace

TEST_CASE("compiled programs agree with the direct axiom scans") {
  std::mt19937 rng(5);
  for (const bool distinct : {true, false}) {
    for (int n = 1; n <= 4; ++n) {
      if (!distinct && n > 2) continue;  // full domain is packed only for n <= 2
      const auto space = distinct ? clauses::TripleSpace::distinct(n)
                                  : clauses::TripleSpace::full(n);
      std::uniform_int_distribution<std::uint32_t> dist(
          0, static_cast<std::uint32_t>((std::uint64_t{1} << space.bits()) - 1));
      for (AxiomId ax : kAllAxioms) {
        const auto program = clauses::compile_axiom(ax, space);
        for (int trial = 0; trial < 60; ++trial) {
          const std::uint32_t mask = dist(rng);
          const auto rel = space.to_relation(mask);
          CHECK(clauses::program_holds(program, mask) == holds(rel, ax));
        }
      }
    }
  }
}

TEST_CASE("mask round-trip through a triple space") {
  const auto space = clauses::TripleSpace::distinct(4);
  CHECK(space.bits() == 24);
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::uint32_t> dist(0, (1u << 24) - 1);
  for (int trial = 0; trial < 50; ++trial) {
    const std::uint32_t mask = dist(rng);
    CHECK(space.to_mask(space.to_relation(mask)) == mask);
  }
}

TEST_CASE("scalar kernel accepts exactly the reference semantics") {
  const auto space = clauses::TripleSpace::distinct(3);
  sweep::Job job;
  job.require = {sweep::compile(AxiomId::B, space), sweep::compile(AxiomId::C, space),
                 sweep::compile(AxiomId::F, space)};
  const auto accepted = collect(sweep::Kernel::Scalar, job, 64);
  CHECK(accepted.size() == 5);  // the five admissible 3-set states
  for (std::uint32_t m = 0; m < 64; ++m) {
    const auto rel = space.to_relation(m);
    const bool expect = holds(rel, AxiomId::B) && holds(rel, AxiomId::C) &&
                        holds(rel, AxiomId::F);
    CHECK(sweep::mask_accepted(job, m) == expect);
  }
}

TEST_CASE("forbid programs invert acceptance") {
  const auto space = clauses::TripleSpace::distinct(3);
  sweep::Job job;
  job.require = {sweep::compile(AxiomId::C, space)};
  job.forbid = {sweep::compile(AxiomId::F, space)};
  for (std::uint32_t m = 0; m < 64; ++m) {
    const auto rel = space.to_relation(m);
    CHECK(sweep::mask_accepted(job, m) ==
          (holds(rel, AxiomId::C) && !holds(rel, AxiomId::F)));
  }
}

TEST_CASE("avx2 kernel matches the scalar kernel") {
  if (!sweep::avx2_supported()) {
    MESSAGE("AVX2 unavailable; skipping equivalence checks");
    return;
  }

  // Exhaustive on the 3-point space for every single-axiom job.
  const auto space3 = clauses::TripleSpace::distinct(3);
  for (AxiomId ax : kAllAxioms) {
    sweep::Job job;
    job.require = {sweep::compile(ax, space3)};
    CHECK(collect(sweep::Kernel::Avx2, job, 64) == collect(sweep::Kernel::Scalar, job, 64));
  }

  // Random require/forbid mixes over slices of the 4-point space.
  std::mt19937 rng(23);
  const auto space4 = clauses::TripleSpace::distinct(4);
  for (int trial = 0; trial < 10; ++trial) {
    sweep::Job job;
    std::uniform_int_distribution<size_t> pick(0, kAllAxioms.size() - 1);
    job.require = {sweep::compile(kAllAxioms[pick(rng)], space4),
                   sweep::compile(kAllAxioms[pick(rng)], space4)};
    job.forbid = {sweep::compile(kAllAxioms[pick(rng)], space4)};
    std::uniform_int_distribution<std::uint64_t> base_dist(0, (1u << 24) - (1u << 14));
    const std::uint64_t base = base_dist(rng);

    std::vector<std::uint32_t> scalar_hits, avx2_hits;
    sweep::run_scalar(job, base, base + (1u << 14), [&](std::uint32_t m) {
      scalar_hits.push_back(m);
      return true;
    });
    sweep::run_avx2(job, base, base + (1u << 14), [&](std::uint32_t m) {
      avx2_hits.push_back(m);
      return true;
    });
    CHECK(scalar_hits == avx2_hits);
  }
}

TEST_CASE("early stop works in both kernels") {
  const auto space = clauses::TripleSpace::distinct(3);
  sweep::Job job;  // no constraints: everything accepted
  for (sweep::Kernel k : {sweep::Kernel::Scalar, sweep::Kernel::Avx2}) {
    if (k == sweep::Kernel::Avx2 && !sweep::avx2_supported()) continue;
    int seen = 0;
    const bool completed = sweep::run_with_kernel(k, job, 64, [&](std::uint32_t m) {
      ++seen;
      return m < 9;  // stop once mask 9 was delivered
    });
    CHECK_FALSE(completed);
    CHECK(seen == 10);
  }
}

TEST_CASE("kernel selection") {
  CHECK(sweep::kernel_name(sweep::Kernel::Scalar) == "scalar");
  CHECK(sweep::kernel_name(sweep::Kernel::Avx2) == "avx2");
  const auto active = sweep::active_kernel();
  if (const char* env = std::getenv("TOL_KERNEL"); env && *env && std::string(env) != "auto") {
    CHECK(sweep::kernel_name(active) == env);
  } else if (sweep::avx2_supported()) {
    CHECK(active == sweep::Kernel::Avx2);
  } else {
    CHECK(active == sweep::Kernel::Scalar);
  }
}
