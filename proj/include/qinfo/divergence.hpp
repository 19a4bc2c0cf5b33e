#pragma once

#include <string>
#include <variant>

#include "qinfo/deformed_math.hpp"
#include "qinfo/entropy.hpp"
#include "qinfo/psi_kernel.hpp"
#include "qinfo/simplex.hpp"

namespace qinfo {

// All divergences are D(p || r) for pair = (p, r), in nats.

double kl(const DivergencePair& pair);

/// -Σ p_j ln_q(r_j/p_j); KL in the limit regime.
double tsallis_div(const DivergencePair& pair, QIndex q);

/// log(Σ p_j^q r_j^{1-q})/(q - 1). Throws LimitIndex near q = 1.
double renyi_div(const DivergencePair& pair, QIndex q);

/// 4/(1-α²) (1 - Σ p_j^{(1-α)/2} r_j^{(1+α)/2}). Throws BadAlpha for α = ±1.
double alpha_div(const DivergencePair& pair, double alpha);

/// -outer(M_ψ(r/p)) with weights p.
double quasilinear_div(const DivergencePair& pair, const PsiKernel& psi, const OuterLog& outer);

/// Σ (p_j^r r_j^{1-r} - p_j^q r_j^{1-q})/(r - q). Throws EqualIndices when r == q.
double hat_div(const DivergencePair& pair, QIndex q, QIndex r);

/// Σ p_j^q r_j^{1-q} log(p_j/r_j); equals KL at q = 1.
double quasi_div(const DivergencePair& pair, QIndex q);

/// -Σ p_j ln_{r,q}(r_j/p_j).
double biparam_div(const DivergencePair& pair, QIndex r, QIndex q);

/// -ln_q exp((r/(1-r)) ((Σ p_j^r r_j^{1-r})^{1/r} - 1)). Throws LimitIndex near r = 1.
double arimoto_div(const DivergencePair& pair, QIndex r, QIndex q);

double jeffreys(const DivergencePair& pair);
double jensen_shannon(const DivergencePair& pair);

/// KL(p || (p + r)/2).
double lin(const DivergencePair& pair);

namespace divergence_measure {
struct Kl {};
struct Tsallis { QIndex q; };
struct Renyi { QIndex q; };
struct Alpha { double alpha; };
struct Quasilinear { PsiKernel psi; OuterLog outer; };
struct Hat { QIndex q; QIndex r; };
struct Quasi { QIndex q; };
struct Biparam { QIndex r; QIndex q; };
struct Arimoto { QIndex r; QIndex q; };
struct Jeffreys {};
struct JensenShannon {};
struct Lin {};
}  // namespace divergence_measure

using DivergenceMeasure =
    std::variant<divergence_measure::Kl, divergence_measure::Tsallis, divergence_measure::Renyi,
                 divergence_measure::Alpha, divergence_measure::Quasilinear,
                 divergence_measure::Hat, divergence_measure::Quasi, divergence_measure::Biparam,
                 divergence_measure::Arimoto, divergence_measure::Jeffreys,
                 divergence_measure::JensenShannon, divergence_measure::Lin>;

double evaluate(const DivergenceMeasure& m, const DivergencePair& pair);
std::string name(const DivergenceMeasure& m);

}  // namespace qinfo
