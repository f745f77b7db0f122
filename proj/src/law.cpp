#include "clt_lab/law.hpp"

#include "clt_lab/error.hpp"
#include "clt_lab/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace clt {

namespace {

template <typename AtomT>
void sort_and_merge(std::vector<AtomT>& atoms)
{
    std::sort(atoms.begin(), atoms.end(),
              [](const AtomT& a, const AtomT& b) { return a.x < b.x; });
    std::vector<AtomT> merged;
    merged.reserve(atoms.size());
    for (auto& atom : atoms) {
        if (!merged.empty() && merged.back().x == atom.x) {
            merged.back().p += atom.p;
        } else {
            merged.push_back(std::move(atom));
        }
    }
    atoms = std::move(merged);
}

} // namespace

Law Law::make(std::vector<Atom> atoms)
{
    if (atoms.empty()) {
        throw Error(ErrorKind::EmptyLaw, "law needs at least one atom");
    }
    CompensatedSum total;
    for (const auto& atom : atoms) {
        if (!(atom.p > 0.0) || !std::isfinite(atom.p)) {
            throw Error(ErrorKind::NonPositiveMass,
                        "atom at " + atom.x.str() + " has non-positive mass");
        }
        total.add(atom.p);
    }
    const double sum = total.value();
    if (std::abs(sum - 1.0) > kMassSumTolerance) {
        throw Error(ErrorKind::MassSumOutOfTolerance,
                    "masses sum to " + std::to_string(sum) + ", expected 1");
    }
    sort_and_merge(atoms);
    for (auto& atom : atoms) {
        atom.p /= sum;
    }
    return Law(std::move(atoms));
}

Law make_law(const std::vector<std::pair<Rational, double>>& pairs)
{
    std::vector<Atom> atoms;
    atoms.reserve(pairs.size());
    for (const auto& [x, p] : pairs) {
        atoms.push_back(Atom{x, p});
    }
    return Law::make(std::move(atoms));
}

MomentSet moments(const Law& law)
{
    std::vector<double> xs;
    xs.reserve(law.size());
    CompensatedSum mean;
    for (const auto& atom : law.atoms()) {
        xs.push_back(atom.x.to_double());
        mean.add(atom.p * xs.back());
    }

    MomentSet m;
    m.mu = mean.value();
    std::array<CompensatedSum, 5> abs_moment;
    CompensatedSum third;
    for (std::size_t i = 0; i < law.size(); ++i) {
        const double p = law[i].p;
        const double d = xs[i] - m.mu;
        const double a = std::abs(d);
        abs_moment[1].add(p * a);
        abs_moment[2].add(p * a * a);
        abs_moment[3].add(p * a * a * a);
        abs_moment[4].add(p * a * a * a * a);
        third.add(p * d * d * d);
    }
    for (int s = 1; s <= 4; ++s) {
        m.beta[s] = abs_moment[s].value();
    }
    if (law.size() == 1) {
        m.beta = {1.0, 0.0, 0.0, 0.0, 0.0};
    }
    m.sigma2 = m.beta[2];
    m.sigma = std::sqrt(m.sigma2);
    m.alpha = law.size() == 1 ? 0.0 : third.value();
    return m;
}

bool check_membership(const Law& law, int s)
{
    if (s < 1) {
        throw Error(ErrorKind::InvalidS, "moment order must be >= 1");
    }
    return law.size() >= 2;
}

Rational lattice_span(const Law& law)
{
    if (law.size() < 2) {
        throw Error(ErrorKind::UnboundedSpan, "single-atom law has unbounded lattice span");
    }
    Rational h = law[1].x - law[0].x;
    for (std::size_t i = 2; i < law.size(); ++i) {
        h = gcd(h, law[i].x - law[i - 1].x);
    }
    return h;
}

Rational min_gap(const Law& law)
{
    if (law.size() < 2) {
        throw Error(ErrorKind::UnboundedSpan, "single-atom law has no atom gap");
    }
    Rational gap = law[1].x - law[0].x;
    for (std::size_t i = 2; i < law.size(); ++i) {
        gap = std::min(gap, law[i].x - law[i - 1].x);
    }
    return gap;
}

Law affine_image(const Law& law, const Rational& scale, const Rational& shift)
{
    if (scale.sign() == 0) {
        throw std::invalid_argument("affine_image: zero scale");
    }
    std::vector<Atom> atoms;
    atoms.reserve(law.size());
    for (const auto& atom : law.atoms()) {
        atoms.push_back(Atom{scale * atom.x + shift, atom.p});
    }
    return Law::make(std::move(atoms));
}

Law reflect(const Law& law)
{
    return affine_image(law, Rational(-1), Rational(0));
}

ExactLaw ExactLaw::make(std::vector<ExactAtom> atoms)
{
    if (atoms.empty()) {
        throw Error(ErrorKind::EmptyLaw, "law needs at least one atom");
    }
    Rational total;
    for (const auto& atom : atoms) {
        if (atom.p.sign() <= 0) {
            throw Error(ErrorKind::NonPositiveMass,
                        "atom at " + atom.x.str() + " has non-positive mass");
        }
        total += atom.p;
    }
    if (std::abs((total - Rational(1)).to_double()) > kMassSumTolerance) {
        throw Error(ErrorKind::MassSumOutOfTolerance,
                    "masses sum to " + total.str() + ", expected 1");
    }
    sort_and_merge(atoms);
    for (auto& atom : atoms) {
        atom.p /= total;
    }
    return ExactLaw(std::move(atoms));
}

Law ExactLaw::to_law() const
{
    std::vector<Atom> atoms;
    atoms.reserve(atoms_.size());
    for (const auto& atom : atoms_) {
        atoms.push_back(Atom{atom.x, atom.p.to_double()});
    }
    return Law::make(std::move(atoms));
}

} // namespace clt
