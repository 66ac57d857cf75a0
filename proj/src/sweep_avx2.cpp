// AVX2 sweep kernel: eight relation masks per vector, one compare per
// clause. This translation unit is the only one built with -mavx2; callers
// must check avx2_supported() (or go through the dispatcher) first.

#include "tol/sweep.hpp"

#if defined(__AVX2__)
#include <immintrin.h>
#endif

namespace tol::sweep {

#if defined(__AVX2__)

bool run_avx2(const Job& job, std::uint64_t begin, std::uint64_t end, const Sink& sink) {
  const __m256i lane_offsets = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);

  std::uint64_t m = begin;
  for (; m + 8 <= end; m += 8) {
    const __m256i masks =
        _mm256_add_epi32(_mm256_set1_epi32(static_cast<int>(m)), lane_offsets);
    // Accepted lanes start all-ones and are pruned program by program.
    __m256i alive = _mm256_set1_epi32(-1);
    for (const Program& prog : job.require) {
      __m256i violated = _mm256_setzero_si256();
      for (const MaskClause& cl : prog.clauses) {
        const __m256i hit = _mm256_cmpeq_epi32(
            _mm256_and_si256(masks, _mm256_set1_epi32(static_cast<int>(cl.select))),
            _mm256_set1_epi32(static_cast<int>(cl.expect)));
        violated = _mm256_or_si256(violated, hit);
      }
      alive = _mm256_andnot_si256(violated, alive);
      if (_mm256_testz_si256(alive, alive)) break;
    }
    if (!_mm256_testz_si256(alive, alive)) {
      for (const Program& prog : job.forbid) {
        __m256i violated = _mm256_setzero_si256();
        for (const MaskClause& cl : prog.clauses) {
          const __m256i hit = _mm256_cmpeq_epi32(
              _mm256_and_si256(masks, _mm256_set1_epi32(static_cast<int>(cl.select))),
              _mm256_set1_epi32(static_cast<int>(cl.expect)));
          violated = _mm256_or_si256(violated, hit);
        }
        alive = _mm256_and_si256(alive, violated);
        if (_mm256_testz_si256(alive, alive)) break;
      }
    }
    const int accepted = _mm256_movemask_ps(_mm256_castsi256_ps(alive));
    if (accepted) {
      for (int lane = 0; lane < 8; ++lane)
        if (accepted & (1 << lane))
          if (!sink(static_cast<std::uint32_t>(m) + static_cast<std::uint32_t>(lane)))
            return false;
    }
  }
  return run_scalar(job, m, end, sink);  // tail
}

#else  // non-x86 or compiler without AVX2 support

bool run_avx2(const Job&, std::uint64_t, std::uint64_t, const Sink&) {
  throw Error("AVX2 kernel was not compiled into this build");
}

#endif

}  // namespace tol::sweep
