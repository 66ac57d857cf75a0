#pragma once

#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "tol/clauses.hpp"

namespace tol::sweep {

// Clause in packed form for spaces of at most 25 bits: fires iff
// (mask & select) == expect, i.e. all hypothesis bits set and all
// conclusion bits clear.
struct MaskClause {
  std::uint32_t select = 0;
  std::uint32_t expect = 0;
};

// A compiled axiom: holds on a mask iff no clause fires.
struct Program {
  AxiomId id;
  std::vector<MaskClause> clauses;
};

Program compile(AxiomId ax, const clauses::TripleSpace& space);

// Accept a mask iff every `require` program holds and every `forbid`
// program is violated.
struct Job {
  std::vector<Program> require;
  std::vector<Program> forbid;
};

bool mask_accepted(const Job& job, std::uint32_t mask);

enum class Kernel { Scalar, Avx2 };

std::string_view kernel_name(Kernel k);

// AVX2 compiled in and supported by this CPU.
bool avx2_supported();

// Kernel the dispatcher will use: the TOL_KERNEL environment variable
// ("scalar" or "avx2") wins, otherwise the best supported one.
Kernel active_kernel();

// Visit masks [begin, end) in increasing order and call `sink` for each
// accepted one. The sink returns false to stop the scan early. Returns
// true iff the whole range was processed.
using Sink = std::function<bool(std::uint32_t)>;

bool run_scalar(const Job& job, std::uint64_t begin, std::uint64_t end, const Sink& sink);
bool run_avx2(const Job& job, std::uint64_t begin, std::uint64_t end, const Sink& sink);

// Dispatched entry point over [0, count).
bool run(const Job& job, std::uint64_t count, const Sink& sink);
bool run_with_kernel(Kernel k, const Job& job, std::uint64_t count, const Sink& sink);

}  // namespace tol::sweep
