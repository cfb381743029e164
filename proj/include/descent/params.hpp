#pragma once

namespace descent {

/// Throws unless 0 <= k <= n and n-k is even.
void check_nk(int n, int k);
/// Additionally requires 0 <= j <= (n-k)/2.
void check_nkj(int n, int k, int j);

}  // namespace descent
