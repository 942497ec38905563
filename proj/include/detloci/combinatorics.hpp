#pragma once
#include <vector>

namespace detloci {

// Visits the k-subsets of {0, ..., n-1} in lexicographic order.
template <typename F>
void for_each_subset(int n, int k, F&& f) {
    if (k < 0 || k > n) return;
    std::vector<int> s(k);
    for (int i = 0; i < k; ++i) s[i] = i;
    while (true) {
        f(static_cast<const std::vector<int>&>(s));
        int i = k - 1;
        while (i >= 0 && s[i] == n - k + i) --i;
        if (i < 0) return;
        ++s[i];
        for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
    }
}

// Visits the weakly increasing k-tuples over {0, ..., n-1} in lexicographic order.
template <typename F>
void for_each_multiset(int n, int k, F&& f) {
    if (k < 0 || (n <= 0 && k > 0)) return;
    std::vector<int> s(k, 0);
    while (true) {
        f(static_cast<const std::vector<int>&>(s));
        int i = k - 1;
        while (i >= 0 && s[i] == n - 1) --i;
        if (i < 0) return;
        ++s[i];
        for (int j = i + 1; j < k; ++j) s[j] = s[i];
    }
}

}  // namespace detloci
