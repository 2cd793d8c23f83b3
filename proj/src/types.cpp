#include "igq/types.hpp"

#include <cmath>
#include <sstream>

namespace igq {

double Tensor4::max_abs() const {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

void check_sigma(double sigma, const char* what) {
    if (!(sigma > 0.0) || !std::isfinite(sigma)) {
        std::ostringstream os;
        os << what << " must be positive and finite, got " << sigma;
        throw DomainError(os.str());
    }
}

void check_r(double r) {
    if (!(r >= 0.0 && r < kRMax)) {
        std::ostringstream os;
        os << "micro-correlation r must lie in [0, 1), got " << r;
        throw DomainError(os.str());
    }
}

}  // namespace igq
