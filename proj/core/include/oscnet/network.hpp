#ifndef OSCNET_NETWORK_HPP
#define OSCNET_NETWORK_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace oscnet {

/// Problem statement for a transfer network: a ring of `s` oscillators that
/// must cyclically exchange their states every `tau` seconds.  The integers
/// m_1..m_s select which member of the (infinite) family of admissible mode
/// spectra is used; all-zero picks the fundamental one.
struct NetworkSpec {
    int s = 1;                 ///< ring size, >= 1
    double tau = 1.0;          ///< transfer period in seconds, > 0
    std::vector<int> m;        ///< s non-negative excitation indices

    NetworkSpec(int s_, double tau_, std::vector<int> m_)
        : s(s_), tau(tau_), m(std::move(m_)) {
        if (s < 1)
            throw std::invalid_argument("NetworkSpec: ring size must be >= 1, got " + std::to_string(s));
        if (!(tau > 0.0))
            throw std::invalid_argument("NetworkSpec: transfer period must be positive");
        if (static_cast<int>(m.size()) != s)
            throw std::invalid_argument("NetworkSpec: need exactly " + std::to_string(s) +
                                        " excitation indices, got " + std::to_string(m.size()));
        for (int mj : m)
            if (mj < 0)
                throw std::invalid_argument("NetworkSpec: excitation indices must be non-negative");
    }

    /// Convenience: all excitation indices equal to `fill`.
    static NetworkSpec uniform(int s, double tau, int fill = 0) {
        return NetworkSpec(s, tau, std::vector<int>(static_cast<size_t>(s), fill));
    }
};

}  // namespace oscnet

#endif
