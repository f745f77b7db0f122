#pragma once

#include "clt_lab/rational.hpp"

#include <array>
#include <span>
#include <utility>
#include <vector>

namespace clt {

struct Atom {
    Rational x;
    double p = 0.0;
};

/// Finite-support probability law with exact atom positions.
///
/// Atoms are sorted by strictly increasing position, every mass is positive
/// and the masses are renormalized to sum to one at construction. Instances
/// are immutable.
class Law {
public:
    /// Merges duplicate positions, sorts and renormalizes. Throws EmptyLaw,
    /// NonPositiveMass or MassSumOutOfTolerance (|sum - 1| > 1e-9).
    static Law make(std::vector<Atom> atoms);

    [[nodiscard]] std::span<const Atom> atoms() const noexcept { return atoms_; }
    [[nodiscard]] std::size_t size() const noexcept { return atoms_.size(); }
    [[nodiscard]] const Atom& operator[](std::size_t i) const { return atoms_[i]; }
    [[nodiscard]] const Rational& min_position() const { return atoms_.front().x; }
    [[nodiscard]] const Rational& max_position() const { return atoms_.back().x; }

private:
    explicit Law(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {}

    std::vector<Atom> atoms_;
};

inline constexpr double kMassSumTolerance = 1e-9;

Law make_law(const std::vector<std::pair<Rational, double>>& pairs);

/// Central moment functionals of a law. beta[s] holds E|X - mu|^s for s = 1..4;
/// beta[0] is unused and equal to 1.
struct MomentSet {
    double mu = 0.0;
    double sigma2 = 0.0;
    double sigma = 0.0;
    double alpha = 0.0;
    std::array<double, 5> beta{1.0, 0.0, 0.0, 0.0, 0.0};
};

MomentSet moments(const Law& law);

/// True iff 0 < beta_s(law) < inf, i.e. the law has at least two atoms.
bool check_membership(const Law& law, int s);

/// Largest h > 0 such that every atom lies on min_position + h*Z.
/// Throws UnboundedSpan for a single-atom law.
Rational lattice_span(const Law& law);

/// Smallest distance between consecutive atoms. Throws UnboundedSpan for a
/// single-atom law.
Rational min_gap(const Law& law);

/// Image of the law under x -> scale*x + shift (scale != 0).
Law affine_image(const Law& law, const Rational& scale, const Rational& shift);

/// Image under x -> -x.
Law reflect(const Law& law);

// Laws with exact rational masses, used by the exact convolution oracle.

struct ExactAtom {
    Rational x;
    Rational p;
};

class ExactLaw {
public:
    /// Merges duplicates, sorts, and divides by the exact mass total. Throws
    /// EmptyLaw, NonPositiveMass or MassSumOutOfTolerance.
    static ExactLaw make(std::vector<ExactAtom> atoms);

    [[nodiscard]] std::span<const ExactAtom> atoms() const noexcept { return atoms_; }
    [[nodiscard]] std::size_t size() const noexcept { return atoms_.size(); }

    /// Same atoms with masses rounded to double.
    [[nodiscard]] Law to_law() const;

private:
    explicit ExactLaw(std::vector<ExactAtom> atoms) : atoms_(std::move(atoms)) {}

    std::vector<ExactAtom> atoms_;
};

} // namespace clt
