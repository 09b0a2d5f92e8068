#pragma once

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "spfk/core/combinatorics.hpp"
#include "spfk/core/sampler.hpp"
#include "spfk/identities/report.hpp"
#include "spfk/tensors/dense_matrix.hpp"
#include "spfk/tensors/tensor.hpp"

namespace spfk {

/// Which reading of the matching-count style coefficients to use.
/// Corrected uses (2n-1)!! (the number of perfect matchings); Paper uses the
/// literal (2n)!! and is kept to demonstrate that it fails.
enum class CoefficientConvention { Corrected, Paper };

/// Report / CLI identifier: lower-cased variant name.
inline std::string identity_id(std::string name) {
    for (char& c : name) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return name;
}

inline const char* convention_name(CoefficientConvention c) {
    return c == CoefficientConvention::Corrected ? "corrected" : "paper";
}

/// Thrown when a requested size exceeds a verifier's cap.
class size_cap_error : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

inline void require_cap(bool ok, const std::string& what) {
    if (!ok) throw size_cap_error("size cap exceeded: " + what);
}

inline constexpr int kDefaultPoints = 3;
inline constexpr int kParanoidPoints = 10;
inline constexpr std::int64_t kSampleBound = 30;

/// Seeds of the evaluation points derived from one check seed.
inline std::vector<std::uint64_t> point_seeds(std::uint64_t seed, const std::string& tag, int points) {
    std::vector<std::uint64_t> out;
    for (int p = 0; p < points; ++p) out.push_back(mix_seed(seed, tag + "#" + std::to_string(p)));
    return out;
}

template <Ring R = Rational>
AltTensor<Rational> random_alt_tensor(int order, int dim, SeededSampler& s, std::int64_t bound = 9) {
    return alt_tensor_from<Rational>(order, dim, [&](std::span<const int>) { return s.signed_rational(bound); });
}

inline DenseMatrix<Rational> random_matrix(int rows, int cols, SeededSampler& s, std::int64_t bound = 9) {
    DenseMatrix<Rational> m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            // Allow zeros so that pivoting paths get exercised.
            const std::int64_t v = s.uniform_int(-static_cast<std::int64_t>(bound), bound);
            m(i, j) = Rational(BigInt(static_cast<long>(v)), BigInt(static_cast<long>(s.uniform_int(1, 4))));
        }
    return m;
}

inline std::vector<int> iota_vector(int n, int start = 0) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = start + i;
    return v;
}

/// 0..n-1 with `skip` removed.
inline std::vector<int> all_but(int n, int skip) {
    std::vector<int> v;
    for (int i = 0; i < n; ++i)
        if (i != skip) v.push_back(i);
    return v;
}

}  // namespace spfk
