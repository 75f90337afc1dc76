#pragma once

#include <boost/multiprecision/mpfr.hpp>

namespace advangle {

// Adjustable-precision real arithmetic (MPFR). Precision is the thread-local
// default at construction time; wrap computations in a PrecisionScope.
using HPReal = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>>;

class PrecisionScope {
  public:
    explicit PrecisionScope(unsigned digits10)
        : saved_(HPReal::default_precision()) {
        HPReal::default_precision(digits10);
    }
    ~PrecisionScope() { HPReal::default_precision(saved_); }

    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

  private:
    unsigned saved_;
};

// pi at the current default precision (mpfr's constant, no cached value).
inline HPReal hp_pi() {
    HPReal pi;
    mpfr_const_pi(pi.backend().data(), MPFR_RNDN);
    return pi;
}

}  // namespace advangle
