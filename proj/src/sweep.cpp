#include "tol/sweep.hpp"

#include <cstdlib>
#include <string>

namespace tol::sweep {

Program compile(AxiomId ax, const clauses::TripleSpace& space) {
  if (space.bits() > 25)
    throw DomainError("triple space too large for packed sweep: " +
                      std::to_string(space.bits()) + " bits");
  Program prog{ax, {}};
  for (const clauses::Clause& cl : clauses::compile_axiom(ax, space)) {
    MaskClause mc;
    for (int i : cl.hyp) {
      mc.select |= std::uint32_t{1} << i;
      mc.expect |= std::uint32_t{1} << i;
    }
    for (int i : cl.concl) mc.select |= std::uint32_t{1} << i;
    prog.clauses.push_back(mc);
  }
  return prog;
}

namespace {

inline bool program_violated(const Program& prog, std::uint32_t mask) {
  for (const MaskClause& cl : prog.clauses)
    if ((mask & cl.select) == cl.expect) return true;
  return false;
}

}  // namespace

bool mask_accepted(const Job& job, std::uint32_t mask) {
  for (const Program& prog : job.require)
    if (program_violated(prog, mask)) return false;
  for (const Program& prog : job.forbid)
    if (!program_violated(prog, mask)) return false;
  return true;
}

bool run_scalar(const Job& job, std::uint64_t begin, std::uint64_t end, const Sink& sink) {
  for (std::uint64_t m = begin; m < end; ++m) {
    if (mask_accepted(job, static_cast<std::uint32_t>(m)))
      if (!sink(static_cast<std::uint32_t>(m))) return false;
  }
  return true;
}

std::string_view kernel_name(Kernel k) {
  return k == Kernel::Scalar ? "scalar" : "avx2";
}

bool avx2_supported() {
  // Detection stays in this non-AVX2 translation unit; the kernel itself
  // lives in the one built with -mavx2.
#if defined(TOL_AVX2_BUILT) && (defined(__x86_64__) || defined(__i386__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Kernel active_kernel() {
  if (const char* env = std::getenv("TOL_KERNEL")) {
    const std::string v(env);
    if (v == "scalar") return Kernel::Scalar;
    if (v == "avx2") {
      if (!avx2_supported())
        throw DomainError("TOL_KERNEL=avx2 but AVX2 is not available on this machine");
      return Kernel::Avx2;
    }
    if (!v.empty() && v != "auto")
      throw DomainError("unknown TOL_KERNEL value '" + v + "' (use scalar, avx2 or auto)");
  }
  return avx2_supported() ? Kernel::Avx2 : Kernel::Scalar;
}

bool run_with_kernel(Kernel k, const Job& job, std::uint64_t count, const Sink& sink) {
  if (k == Kernel::Avx2) return run_avx2(job, 0, count, sink);
  return run_scalar(job, 0, count, sink);
}

bool run(const Job& job, std::uint64_t count, const Sink& sink) {
  return run_with_kernel(active_kernel(), job, count, sink);
}

}  // namespace tol::sweep
