#include "qesqnm/model.hpp"

#include <algorithm>
#include <array>
#include <span>

namespace qesqnm {

namespace {

int degree_of(std::span<const cplx> ascending, double zero_tol)
{
    for (int k = static_cast<int>(ascending.size()) - 1; k >= 0; --k) {
        if (std::abs(ascending[k]) > zero_tol) {
            return k;
        }
    }
    return -1;
}

std::vector<cplx> ascending(cplx c0, cplx c1, cplx c2, const std::vector<cplx> &higher)
{
    std::vector<cplx> c{c0, c1, c2};
    c.insert(c.end(), higher.begin(), higher.end());
    return c;
}

} // namespace

cplx PolyP::operator()(cplx z) const
{
    cplx acc{0.0};
    for (auto it = higher.rbegin(); it != higher.rend(); ++it) {
        acc = acc * z + *it;
    }
    return ((acc * z + A2) * z + A1) * z + A0;
}

cplx PolyP::derivative(cplx z) const
{
    cplx acc{0.0};
    const int n = static_cast<int>(higher.size());
    for (int k = n - 1; k >= 0; --k) {
        acc = acc * z + static_cast<double>(k + 3) * higher[k];
    }
    return (acc * z + 2.0 * A2) * z + A1;
}

int PolyP::degree(double zero_tol) const
{
    return degree_of(ascending(A0, A1, A2, higher), zero_tol);
}

cplx PolyQ::operator()(cplx z) const
{
    cplx acc{0.0};
    for (auto it = higher.rbegin(); it != higher.rend(); ++it) {
        acc = acc * z + *it;
    }
    return ((acc * z + alpha) * z + beta) * z + gamma;
}

cplx PolyQ::derivative(cplx z) const
{
    cplx acc{0.0};
    const int n = static_cast<int>(higher.size());
    for (int k = n - 1; k >= 0; --k) {
        acc = acc * z + static_cast<double>(k + 3) * higher[k];
    }
    return (acc * z + 2.0 * alpha) * z + beta;
}

int PolyQ::degree(double zero_tol) const
{
    return degree_of(ascending(gamma, beta, alpha, higher), zero_tol);
}

bool PolyQ::is_real() const
{
    auto real = [](cplx c) { return c.imag() == 0.0; };
    return real(alpha) && real(beta) && real(gamma) && std::all_of(higher.begin(), higher.end(), real);
}

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 7> kFamilyNames{{
    {Family::Scarf2, "scarf2"},
    {Family::Morse, "morse"},
    {Family::GenPoschlTeller, "gen-poschl-teller"},
    {Family::ShiftedOsc, "shifted-osc"},
    {Family::RadialOsc, "radial-osc"},
    {Family::Scarf1, "scarf1"},
    {Family::Custom, "custom"},
}};

} // namespace

std::string_view to_string(Family f)
{
    for (const auto &[fam, name] : kFamilyNames) {
        if (fam == f) {
            return name;
        }
    }
    return "custom";
}

Family family_from_string(std::string_view s)
{
    for (const auto &[fam, name] : kFamilyNames) {
        if (name == s) {
            return fam;
        }
    }
    throw ModelError("unknown family tag '" + std::string(s) + "'");
}

std::string_view to_string(Solvability s)
{
    switch (s) {
    case Solvability::ExactlySolvable:
        return "ExactlySolvable";
    case Solvability::QesType1:
        return "QesType1";
    case Solvability::HigherType:
        return "HigherType";
    }
    return "HigherType";
}

SolvabilityClass classify_solvability(const PolyP &p, const PolyQ &q, double zero_tol)
{
    const int m = p.degree(zero_tol);
    const int n = q.degree(zero_tol);
    const int order = std::max(m, n - 1);
    Solvability kind = Solvability::ExactlySolvable;
    if (order == 2) {
        kind = Solvability::QesType1;
    } else if (order >= 3) {
        kind = Solvability::HigherType;
    }
    return {kind, m, n};
}

void ValidationReport::fail(std::string check, std::string message)
{
    valid = false;
    violations.push_back({std::move(check), std::move(message)});
}

} // namespace qesqnm
