#pragma once

// Action of D_q(C^N) on the quantum plane O_q(C^N) by multiplication and
// q-difference operators.

#include "qweyl/algebras.hpp"

namespace qweyl {

enum class ActionConvention {
  /// d_i x^n = q^{n_1+...+n_{i-1}} (q^{2 n_i} - 1) x^{n - e_i}; a representation.
  Consistent,
  /// d_i x^n = (q^{n_i} - 1) x^{n - e_i}, the difference quotient with q in place of q^2.
  AsPrinted,
};

/// Applies a D_q(C^N) element (generators x1..xN, d1..dN) to an element of
/// O_q(C^N) (generators x1..xN). Products act right factor first.
template <class C>
class PlaneAction {
 public:
  PlaneAction(const Presentation<C>& dq, const Presentation<C>& plane, ActionConvention conv = ActionConvention::Consistent)
      : dq_(dq), plane_(plane), n_(plane.size()), conv_(conv) {
    if (dq.size() != 2 * n_) throw PresentationError("action needs D_q(C^N) and O_q(C^N) with the same N");
  }

  Element<C> act(const Element<C>& op, const Element<C>& f) const {
    Accumulator<C> acc;
    for (const auto& [m, c] : op) acc.add(act_monomial(m, f), c);
    return acc.to_element();
  }

  /// Action of a single generator of D_q(C^N).
  Element<C> act_generator(int g, const Element<C>& f) const {
    Accumulator<C> acc;
    for (const auto& [m, c] : f) {
      if (g < n_) {
        Monomial r = m;
        r.set(g, m[g] + 1);
        acc.add(r, c * dq_.qpow(prefix(m, g)));
        continue;
      }
      int i = g - n_;
      int ni = m[i];
      if (ni == 0) continue;
      Monomial r = m;
      r.set(i, ni - 1);
      C s = conv_ == ActionConvention::Consistent ? dq_.qpow(prefix(m, i)) * (dq_.qpow(2 * ni) - dq_.scalar(1))
                                                  : dq_.qpow(ni) - dq_.scalar(1);
      acc.add(r, c * s);
    }
    return acc.to_element();
  }

 private:
  static int prefix(const Monomial& m, int i) {
    int s = 0;
    for (int k = 0; k < i; ++k) s += m[k];
    return s;
  }

  Element<C> act_monomial(const Monomial& m, const Element<C>& f) const {
    Element<C> cur = f;
    for (int g = 2 * n_ - 1; g >= 0; --g)
      for (int k = 0; k < m[g] && !cur.is_zero(); ++k) cur = act_generator(g, cur);
    return cur;
  }

  const Presentation<C>& dq_;
  const Presentation<C>& plane_;
  int n_;
  ActionConvention conv_;
};

}  // namespace qweyl
