#include "gf2perfect/word.hpp"

#if defined(GF2P_HAVE_CLMUL)
#include <immintrin.h>
#endif

namespace gf2p::word {

Wide clmul(Word a, Word b) noexcept {
#if defined(GF2P_HAVE_CLMUL)
  const __m128i r = _mm_clmulepi64_si128(_mm_cvtsi64_si128(static_cast<long long>(a)),
                                         _mm_cvtsi64_si128(static_cast<long long>(b)), 0x00);
  return {static_cast<Word>(_mm_cvtsi128_si64(r)),
          static_cast<Word>(_mm_cvtsi128_si64(_mm_unpackhi_epi64(r, r)))};
#else
  Wide r;
  while (b != 0) {
    const int i = std::countr_zero(b);
    r.lo ^= a << i;
    if (i != 0) r.hi ^= a >> (64 - i);
    b &= b - 1;
  }
  return r;
#endif
}

}  // namespace gf2p::word
