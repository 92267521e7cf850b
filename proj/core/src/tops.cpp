#include "elevenvertex/tops.hpp"

namespace elv::tops {

Mat2<Poly> spin_symbols(const VarTablePtr& tab, int base) {
  return Mat2<Poly>(Poly::var(tab, base), Poly::var(tab, base + 1),
                    Poly::var(tab, base + 2), Poly::var(tab, base + 3));
}

}  // namespace elv::tops
