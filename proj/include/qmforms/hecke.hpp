#pragma once

#include <cstddef>

#include "qmforms/qmform.hpp"
#include "qmforms/qseries.hpp"

namespace qmf {

// T_p acting on forms of weight m and depth at most n.
struct HeckeContext {
  long p;
  FormSpaceKey key;

  HeckeContext(long p, FormSpaceKey key);
};

// Coefficient form of T_p:
//   b_j = p^{m-n-1} sum_{e | p, e | j} (p/e)^{1-m} a_{(p/e)(j/e)}.
// The result has order floor(s.order() / p).
QSeries hecke_series(const HeckeContext& ctx, const QSeries& s);
// Same with an explicit output order; InsufficientOrder if s is too short.
QSeries hecke_series(const HeckeContext& ctx, const QSeries& s, std::size_t out_order);

// T_p f computed on q-expansions and decomposed back into the ring.
// A decomposition failure would contradict closure of the space under T_p
// and is reported as InternalConsistency.
QMForm hecke(const HeckeContext& ctx, const QMForm& f);

// hecke((p, (m+2, n+1)), f') == (hecke((p, (m, n)), f))'
bool hecke_commutes_with_derive(const HeckeContext& ctx, const QMForm& f);

// Exponent of d in the composition law T_p T_q = sum_{d | (p,q)} d^e T_{pq/d^2}.
enum class CompositionExponent {
  WeightMinusDepthMinusOne,       // e = m - n - 1
  WeightMinusTwiceDepthMinusOne,  // e = m - 2n - 1
};

// Exact comparison of both sides of the composition law on f.
bool hecke_composition_check(long p, long q, const FormSpaceKey& key, const QMForm& f,
                             CompositionExponent exponent = CompositionExponent::WeightMinusDepthMinusOne);

}  // namespace qmf
