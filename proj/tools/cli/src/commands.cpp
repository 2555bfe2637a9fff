#include "bient_cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

#include "bient/error.hpp"
#include "bient/sampling.hpp"
#include "bient/su_bases.hpp"
#include "bient_cli/state_file.hpp"

namespace bient::cli {

namespace {

std::string num(double x) { return fmt::format("{:.12g}", x); }

// Accumulates the running maximum of one named error.
class Check {
  public:
    explicit Check(std::string name) : name_(std::move(name)) {}
    void observe(double error) {
        // NaN must never hide a failure
        if (std::isnan(error)) error = INFINITY;
        worst_ = std::max(worst_, error);
    }
    CheckResult finish(double tol) const { return {name_, worst_, tol, worst_ <= tol}; }

  private:
    std::string name_;
    double worst_ = 0.0;
};

template <std::size_t N>
double max_gap(const std::array<double, N>& a, const std::array<double, N>& b) {
    double w = 0.0;
    for (std::size_t k = 0; k < N; ++k) w = std::max(w, std::abs(a[k] - b[k]));
    return w;
}

double max_gap(const CoherenceDecomposition& a, const CoherenceDecomposition& b) {
    double w = std::max(max_gap(a.u, b.u), max_gap(a.v, b.v));
    for (std::size_t i = 0; i < 3; ++i) w = std::max(w, max_gap(a.beta[i], b.beta[i]));
    return w;
}

double orthonormality_defect(const SchmidtForm& s) {
    auto dot = [](auto const& a, auto const& b, std::size_t n) {
        Complex acc = 0.0;
        for (std::size_t k = 0; k < n; ++k) acc += std::conj(a[k]) * b[k];
        return acc;
    };
    const std::size_t n = s.dim_b;
    double w = std::abs(dot(s.x1, s.x2, 2));
    w = std::max(w, std::abs(dot(s.y1, s.y2, n)));
    w = std::max(w, std::abs(dot(s.x1, s.x1, 2) - 1.0));
    w = std::max(w, std::abs(dot(s.x2, s.x2, 2) - 1.0));
    w = std::max(w, std::abs(dot(s.y1, s.y1, n) - 1.0));
    w = std::max(w, std::abs(dot(s.y2, s.y2, n) - 1.0));
    return w;
}

double det2(const SmallMatrix& m) { return (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)).real(); }

struct Suite {
    Check c_amp_bloch{"concurrence_amplitude_vs_bloch"};
    Check c_amp_schmidt{"concurrence_amplitude_vs_schmidt"};
    Check eof_entropy{"eof_vs_entropy_a"};
    Check entropy_ab{"entropy_a_vs_entropy_b"};
    Check det_identity{"four_det_rho_a_vs_c_squared"};
    Check schmidt_norm{"schmidt_k1sq_plus_k2sq"};
    Check schmidt_recon{"schmidt_reconstruction"};
    Check schmidt_ortho{"schmidt_orthonormality"};
    Check codec_rho{"codec_reconstruct_decompose"};
    Check codec_coeff{"codec_decompose_reconstruct"};
    Check reduced_a_check{"reduced_a_vs_bloch_form"};
    Check reduced_b_check{"reduced_b_vs_coherence_form"};
    Check purity_relation{"v_norm_sq_vs_purity_relation"};
    Check local_unitary{"local_unitary_invariance"};

    // The Bloch route costs sqrt(eps) near C = 0, so product states only
    // enter the checks whose formulas stay well conditioned there.
    void run_state(const PureState& psi, bool include_bloch) {
        const EntanglementReport r = full_report(psi);
        if (include_bloch) c_amp_bloch.observe(std::abs(r.c_amplitude - r.c_bloch));
        c_amp_schmidt.observe(std::abs(r.c_amplitude - r.c_schmidt));

        const DensityMatrix rho = psi.density();
        const DensityMatrix rho_a = reduced_a(rho);
        const DensityMatrix rho_b = reduced_b(rho);
        const double s_a = von_neumann_entropy(rho_a);
        eof_entropy.observe(std::abs(r.eof - s_a));
        entropy_ab.observe(std::abs(s_a - von_neumann_entropy(rho_b)));
        det_identity.observe(std::abs(4.0 * det2(rho_a.matrix()) - r.c_amplitude * r.c_amplitude));

        const SchmidtForm s = schmidt_decompose(psi.embedded());
        schmidt_norm.observe(std::abs(s.k1 * s.k1 + s.k2 * s.k2 - 1.0));
        const auto recombined = s.recombine();
        schmidt_recon.observe(phase_aligned_distance(psi.embedded().amplitudes(), recombined));
        schmidt_ortho.observe(orthonormality_defect(s));

        const CoherenceDecomposition d = decompose(rho);
        codec_rho.observe(max_abs_diff(reconstruct(d).matrix(), rho.matrix()));
        codec_coeff.observe(max_gap(decompose(reconstruct(d)), d));
        reduced_a_check.observe(max_abs_diff(rho_a.matrix(), qubit_from_bloch(d.u)));
        reduced_b_check.observe(max_abs_diff(rho_b.matrix(), qutrit_from_coherence(d.v)));
        const double u2 = d.u_norm() * d.u_norm();
        const double v2 = d.v_norm() * d.v_norm();
        purity_relation.observe(std::abs(v2 - (1.0 + 3.0 * u2) / 4.0));
    }
};

} // namespace

std::string render_report(const EntanglementReport& r, ReportFormat format) {
    const std::pair<const char*, double> fields[] = {
        {"c_amplitude", r.c_amplitude}, {"c_bloch", r.c_bloch}, {"c_schmidt", r.c_schmidt},
        {"eof", r.eof},                 {"vn_entropy_a", r.vn_entropy_a}, {"u_norm", r.u_norm},
        {"v_norm", r.v_norm},           {"k1", r.k1},           {"k2", r.k2},
    };
    std::string out;
    if (format == ReportFormat::text) {
        for (const auto& [key, value] : fields) out += fmt::format("{:<13}{}\n", key, num(value));
        return out;
    }
    out = "{";
    bool first = true;
    for (const auto& [key, value] : fields) {
        out += fmt::format("{}\"{}\": {}", first ? "" : ", ", key, num(value));
        first = false;
    }
    out += "}\n";
    return out;
}

int cmd_compute(const std::string& path, ReportFormat format, bool renormalize, std::ostream& out,
                std::ostream& err) {
    try {
        const PureState psi = load_state_file(path, ParseOptions{renormalize});
        out << render_report(full_report(psi), format);
        return kExitOk;
    } catch (const std::exception& e) {
        err << "bient compute: " << e.what() << '\n';
        return kExitUsage;
    }
}

bool VerifyOutcome::overall() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

VerifyOutcome run_verification(std::size_t n, std::uint64_t seed, double tol) {
    if (n < 1) throw ValidationError("verify: n must be at least 1");
    if (!(tol >= 0.0)) throw ValidationError("verify: tol must be a non-negative number");

    Suite suite;
    Check orthogonality{"generator_orthogonality"};
    Check product_c{"product_state_concurrence_zero"};
    Check product_norms{"product_state_unit_bloch_norms"};
    Check embedding{"qubit_pair_embedding"};
    Check pair_concordance{"qubit_pair_concordance"};
    Check pair_round_trip{"schmidt_pair_round_trip"};
    VerifyOutcome outcome;

    const auto sigma = pauli_matrices();
    const auto lambda = gell_mann_matrices();
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            orthogonality.observe(std::abs(trace_of_product(sigma[i], sigma[j]) - (i == j ? 2.0 : 0.0)));
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j)
            orthogonality.observe(std::abs(trace_of_product(lambda[i], lambda[j]) - (i == j ? 2.0 : 0.0)));

    const RandomStream root(seed);
    for (std::size_t idx = 0; idx < n; ++idx) {
        RandomStream stream = root.derive(idx);
        const PureState psi = haar_random(3, stream);
        suite.run_state(psi, true);

        const CoherenceDecomposition d = decompose(psi.density());
        outcome.max_u_v_gap = std::max(outcome.max_u_v_gap, std::abs(d.u_norm() - d.v_norm()));

        const SmallMatrix u_a = haar_unitary(2, stream);
        const SmallMatrix u_b = haar_unitary(3, stream);
        const double c0 = concurrence_amplitudes(psi);
        suite.local_unitary.observe(std::abs(concurrence_amplitudes(apply_local(u_a, u_b, psi)) - c0));

        const auto fa = haar_vector(2, stream);
        const auto fb = haar_vector(3, stream);
        const PureState prod = product_state(std::span(fa.data(), 2), std::span(fb.data(), 3));
        product_c.observe(concurrence_amplitudes(prod));
        const CoherenceDecomposition dp = decompose(prod.density());
        product_norms.observe(std::max(std::abs(dp.u_norm() - 1.0), std::abs(dp.v_norm() - 1.0)));
        suite.run_state(prod, false);

        const PureState pair = haar_random(2, stream);
        embedding.observe(std::abs(concurrence_amplitudes(pair) - concurrence_amplitudes(pair.embedded())));
        const double cp = concurrence_amplitudes(pair);
        pair_concordance.observe(std::abs(cp - concurrence_schmidt(schmidt_decompose(pair))));
        pair_concordance.observe(std::abs(cp - concurrence_bloch(pair)));
    }

    suite.run_state(maximally_entangled_state(3), true);
    constexpr int kGrid = 16;
    const double k_min = 1.0 / std::sqrt(2.0);
    for (int g = 0; g <= kGrid; ++g) {
        const double k1 = k_min + (1.0 - k_min) * g / kGrid;
        const PureState psi = schmidt_pair_state(k1);
        suite.run_state(psi, g < kGrid);
        const SchmidtForm s = schmidt_decompose(psi);
        pair_round_trip.observe(std::max(std::abs(s.k1 - k1), std::abs(s.k2 - std::sqrt(1.0 - k1 * k1))));
    }

    for (const Check* c : {&orthogonality, &suite.c_amp_bloch, &suite.c_amp_schmidt, &suite.eof_entropy,
                           &suite.entropy_ab, &suite.det_identity, &suite.schmidt_norm, &suite.schmidt_recon,
                           &suite.schmidt_ortho, &suite.codec_rho, &suite.codec_coeff, &suite.reduced_a_check,
                           &suite.reduced_b_check, &suite.purity_relation, &product_c, &product_norms,
                           &suite.local_unitary, &embedding, &pair_concordance, &pair_round_trip}) {
        outcome.checks.push_back(c->finish(tol));
    }
    return outcome;
}

std::string render_verify_table(const VerifyOutcome& outcome) {
    std::string out = fmt::format("{:<36} {:>20} {:>20}  {}\n", "check", "max_error", "tolerance", "status");
    for (const CheckResult& c : outcome.checks) {
        out += fmt::format("{:<36} {:>20} {:>20}  {}\n", c.name, num(c.max_error), num(c.tolerance),
                           c.passed ? "PASS" : "FAIL");
    }
    out += fmt::format("note: max ||u| - |v|| over the Haar ensemble = {}\n", num(outcome.max_u_v_gap));
    out += fmt::format("overall: {}\n", outcome.overall() ? "PASS" : "FAIL");
    return out;
}

int cmd_verify(std::size_t n, std::uint64_t seed, double tol, std::ostream& out, std::ostream& err) {
    try {
        const VerifyOutcome outcome = run_verification(n, seed, tol);
        out << render_verify_table(outcome);
        return outcome.overall() ? kExitOk : kExitVerifyFailed;
    } catch (const std::exception& e) {
        err << "bient verify: " << e.what() << '\n';
        return kExitUsage;
    }
}

void write_sample_csv(std::size_t n, std::uint64_t seed, std::ostream& out) {
    out << kSampleHeader << '\n';
    const RandomStream root(seed);
    for (std::size_t idx = 0; idx < n; ++idx) {
        RandomStream stream = root.derive(idx);
        const EntanglementReport r = full_report(haar_random(3, stream));
        out << fmt::format("{},{},{},{},{},{},{}\n", idx, num(r.c_amplitude), num(r.eof), num(r.u_norm),
                           num(r.v_norm), num(r.k1), num(r.k2));
    }
}

int cmd_sample(std::size_t n, std::uint64_t seed, const std::string& path, std::ostream& out, std::ostream& err) {
    if (n < 1) {
        err << "bient sample: n must be at least 1\n";
        return kExitUsage;
    }
    try {
        if (path == "-") {
            write_sample_csv(n, seed, out);
            return kExitOk;
        }
        std::ostringstream buffer;
        write_sample_csv(n, seed, buffer);
        std::ofstream file(path, std::ios::binary | std::ios::trunc);
        if (!file) throw Error("cannot open '" + path + "' for writing");
        file << buffer.str();
        file.flush();
        if (!file) throw Error("write to '" + path + "' failed");
        return kExitOk;
    } catch (const std::exception& e) {
        err << "bient sample: " << e.what() << '\n';
        return kExitUsage;
    }
}

} // namespace bient::cli
