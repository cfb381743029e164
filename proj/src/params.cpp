#include "descent/params.hpp"

#include <stdexcept>
#include <string>

namespace descent {

void check_nk(int n, int k) {
    if (n < 0 || k < 0 || k > n || (n - k) % 2 != 0) {
        throw std::invalid_argument("need 0 <= k <= n with n-k even (n=" + std::to_string(n) +
                                    ", k=" + std::to_string(k) + ")");
    }
}

void check_nkj(int n, int k, int j) {
    check_nk(n, k);
    if (j < 0 || 2 * j > n - k) {
        throw std::invalid_argument("need 0 <= j <= (n-k)/2 (n=" + std::to_string(n) + ", k=" +
                                    std::to_string(k) + ", j=" + std::to_string(j) + ")");
    }
}

}  // namespace descent
