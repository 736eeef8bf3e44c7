#pragma once

#include <string>
#include <vector>

#include "manakov/types.hpp"

namespace manakov {

enum class ProfileKind { Sech, Gaussian, Sampled };

struct SampleRow {
    double x;
    Complex q1, q2, q3;
};

// Vector initial datum q0(x) = (q1,q2,q3)(x).
//   sech:     c_j * sech((x - center)/width)
//   gaussian: c_j * exp(-((x - center)/width)^2 / 2)
//   sampled:  piecewise-linear through `samples`, zero outside their span
// support_cutoff L is the half-width used when the scattering integrals
// truncate the line to [-L, L].
struct InitialProfile {
    ProfileKind kind = ProfileKind::Sech;
    std::array<Complex, 3> amplitudes{};
    double width = 1.0;
    double center = 0.0;
    double support_cutoff = 20.0;
    std::vector<SampleRow> samples;

    CRow3 eval(double x) const;
    void validate() const;  // throws InvalidProfileError

    // integral of |q0| (summed over components) outside [-L, L]
    double tail_bound() const;

    bool is_zero() const;
};

InitialProfile profile_from_csv(const std::string& path);

// FNV-1a hash of the canonical profile description, hex string.
std::string profile_fingerprint(const InitialProfile& p);

std::string kind_name(ProfileKind k);
ProfileKind kind_from_name(const std::string& s);

}  // namespace manakov
