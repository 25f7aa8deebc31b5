#pragma once

#include <cctype>
#include <cmath>
#include <string>
#include <string_view>
#include <vector>

#include "orbk/errors.hpp"
#include "orbk/quaternion.hpp"

namespace orbk {

// The finite subgroups of SU(2): two infinite families plus the three binary
// polyhedral groups.
enum class AdeFamily { Cyclic, BinaryDihedral, BinaryTetrahedral, BinaryOctahedral, BinaryIcosahedral };

// Parameter bound keeping the coordinatewise element tolerance sound; also
// caps group orders at desk scale (Cyclic(n) has order n, BinaryDihedral(n)
// has order 4n).
inline constexpr int kMaxFamilyParameter = 500;

struct AdeLabel {
    AdeFamily family = AdeFamily::Cyclic;
    int parameter = 2;  // meaningful for the two infinite families only

    bool operator==(const AdeLabel&) const = default;

    static AdeLabel cyclic(int n) { return {AdeFamily::Cyclic, n}; }
    static AdeLabel binary_dihedral(int n) { return {AdeFamily::BinaryDihedral, n}; }
    static AdeLabel e6() { return {AdeFamily::BinaryTetrahedral, 0}; }
    static AdeLabel e7() { return {AdeFamily::BinaryOctahedral, 0}; }
    static AdeLabel e8() { return {AdeFamily::BinaryIcosahedral, 0}; }
};

// Dynkin-style text form, affine convention: "A<n>" is Cyclic(n+1) (the
// A_n label pairs with Z/(n+1)), "D<n>" is BinaryDihedral(n-2) for n >= 4,
// and "E6"/"E7"/"E8" are the three exceptional groups.
inline std::string to_string(const AdeLabel& label) {
    switch (label.family) {
        case AdeFamily::Cyclic: return "A" + std::to_string(label.parameter - 1);
        case AdeFamily::BinaryDihedral: return "D" + std::to_string(label.parameter + 2);
        case AdeFamily::BinaryTetrahedral: return "E6";
        case AdeFamily::BinaryOctahedral: return "E7";
        case AdeFamily::BinaryIcosahedral: return "E8";
    }
    throw error("unreachable ADE family");
}

inline AdeLabel parse_ade_label(std::string_view text) {
    auto fail = [&] { throw error("unknown ADE label '" + std::string(text) + "'"); };
    if (text.size() < 2) fail();
    char kind = text[0];
    int n = 0;
    for (std::size_t i = 1; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) fail();
        n = n * 10 + (text[i] - '0');
        if (n > 100000) fail();
    }
    switch (kind) {
        case 'A':
            if (n < 1 || n + 1 > kMaxFamilyParameter) fail();
            return AdeLabel::cyclic(n + 1);
        case 'D':
            if (n < 4 || n - 2 > kMaxFamilyParameter) fail();
            return AdeLabel::binary_dihedral(n - 2);
        case 'E':
            if (n == 6) return AdeLabel::e6();
            if (n == 7) return AdeLabel::e7();
            if (n == 8) return AdeLabel::e8();
            fail();
    }
    fail();
    return {};
}

// Standard unit-quaternion generators for each family.
inline std::vector<Quaternion> generators(const AdeLabel& label) {
    const double pi = std::acos(-1.0);
    switch (label.family) {
        case AdeFamily::Cyclic: {
            int n = label.parameter;
            if (n < 2) throw error("Cyclic parameter must be at least 2");
            if (n > kMaxFamilyParameter) throw error("Cyclic parameter exceeds supported bound");
            return {{std::cos(2 * pi / n), std::sin(2 * pi / n), 0.0, 0.0}};
        }
        case AdeFamily::BinaryDihedral: {
            int n = label.parameter;
            if (n < 2) throw error("BinaryDihedral parameter must be at least 2");
            if (n > kMaxFamilyParameter) throw error("BinaryDihedral parameter exceeds supported bound");
            return {{std::cos(pi / n), std::sin(pi / n), 0.0, 0.0}, {0.0, 0.0, 1.0, 0.0}};
        }
        case AdeFamily::BinaryTetrahedral:
            return {{0.0, 1.0, 0.0, 0.0}, {0.5, 0.5, 0.5, 0.5}};
        case AdeFamily::BinaryOctahedral: {
            const double s = 1.0 / std::sqrt(2.0);
            return {{s, s, 0.0, 0.0}, {0.5, 0.5, 0.5, 0.5}};
        }
        case AdeFamily::BinaryIcosahedral: {
            // (1/phi + phi*i + j)/2 is unit since phi^-2 + phi^2 + 1 = 4.
            const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
            return {{0.5, 0.5, 0.5, 0.5}, {0.5 / phi, 0.5 * phi, 0.5, 0.0}};
        }
    }
    throw error("unreachable ADE family");
}

// The label set exercised by the self test battery.
inline std::vector<AdeLabel> builtin_labels() {
    std::vector<AdeLabel> labels;
    for (int n = 2; n <= 20; ++n) labels.push_back(AdeLabel::cyclic(n));
    for (int n = 2; n <= 10; ++n) labels.push_back(AdeLabel::binary_dihedral(n));
    labels.push_back(AdeLabel::e6());
    labels.push_back(AdeLabel::e7());
    labels.push_back(AdeLabel::e8());
    return labels;
}

}  // namespace orbk
