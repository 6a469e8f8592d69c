// Acceptance battery: nine exact-arithmetic criteria, one summary line each.
// Exit status is the number of failed criteria.

#include <chrono>
#include <iostream>
#include <vector>

#include "ospssv/rep.hpp"
#include "ospssv/ssv.hpp"

using namespace ospssv;

namespace {

int g_failures = 0;

struct Outcome {
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::size_t skipped = 0;
    std::vector<std::string> failed_names;

    void absorb(const VerificationReport& rep) {
        checks += rep.checks.size();
        failures += rep.failures();
        skipped += rep.skipped();
        for (const auto& c : rep.checks)
            if (c.status == CheckStatus::Fail)
                failed_names.push_back(rep.campaign + "/" + c.name + " [" + c.witness + "]");
    }
};

template <class F>
void criterion(int number, const std::string& what, F&& body) {
    Outcome out;
    auto t0 = std::chrono::steady_clock::now();
    body(out);
    long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    bool pass = out.failures == 0;
    if (!pass)
        ++g_failures;
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << number << ": " << what << " ("
              << out.checks << " checks, " << out.failures << " failures, " << out.skipped
              << " singular-skipped, " << ms << " ms)\n";
    for (const auto& name : out.failed_names)
        std::cout << "       failed: " << name << "\n";
    std::cout.flush();
}

const std::vector<Signature> kRepGrid = {Signature(1, 1), Signature(2, 1), Signature(3, 1),
                                         Signature(0, 1), Signature(3, 0)};

struct AnnihilationCase {
    int M, n, m;
};
const std::vector<AnnihilationCase> kMainGrid = {
    {1, 1, 2}, {1, 1, 3}, {1, 1, 4}, {2, 1, 2}, {3, 1, 2},
    {0, 1, 2}, {0, 1, 3}, {3, 0, 2}, {3, 0, 3}, {5, 0, 2},
};

} // namespace

int main() {
    std::cout << "acceptance: exact checks only (tolerance 0, rational arithmetic)\n";

    criterion(1, "Brauer identity suite up to B_9(w)", [](Outcome& out) {
        out.absorb(identity_suite(4));
    });

    criterion(2, "J_m membership with certificates (k <= 4, odd l <= 5)", [](Outcome& out) {
        out.absorb(jm_suite(4, 5));
    });

    criterion(3, "representation soundness: Brauer relations under P/Q, qxq, supertraces",
              [](Outcome& out) {
                  for (Signature sig : kRepGrid) {
                      out.absorb(rep_relations_check(sig, 4, 17));
                      out.absorb(qxq_check(sig, 3, 19));
                      // str_a F[r]_a = 0
                      Uea uea(sig);
                      VerificationReport strf;
                      strf.campaign = "strF";
                      for (int r : {-2, -1, 0, 1}) {
                          UTensorOp f = f_matrix(r, 1, 1, uea);
                          strf.require("strF/M" + std::to_string(sig.M) + "n" +
                                           std::to_string(sig.n) + "/r" + std::to_string(r),
                                       normalize_entries(f.partial_supertrace({1}), uea, false)
                                           .is_zero(),
                                       "str_a F[r]_a != 0");
                      }
                      out.absorb(strf);
                  }
              });

    criterion(4, "main theorem instances: osp[t]-annihilation at K = -(M-2n-2), with "
                 "non-critical negative control",
              [](Outcome& out) {
                  for (const auto& c : kMainGrid)
                      out.absorb(verify_annihilation(Signature(c.M, c.n), c.m, {0, 1}));
              });

    criterion(5, "commutativity [phi_2, phi_3] = 0", [](Outcome& out) {
        for (Signature sig : {Signature(1, 1), Signature(0, 1), Signature(3, 0)})
            out.absorb(verify_commutativity(sig, {2, 3}));
    });

    criterion(6, "integral/rational equivalence with singular-case detection",
              [](Outcome& out) {
                  for (const auto& c : kMainGrid)
                      out.absorb(integral_rational_equivalence(Signature(c.M, c.n), c.m));
              });

    criterion(7, "representation-level identity campaigns (cyclic properties, symmetriser "
                 "lemmas, f[1] expansion, >= 50 instances per family and signature)",
              [](Outcome& out) {
                  for (Signature sig : {Signature(1, 1), Signature(3, 0)}) {
                      out.absorb(verify_rep_identities(sig, 2, 101, 25));
                      out.absorb(verify_rep_identities(sig, 3, 102, 25));
                  }
              });

    criterion(8, "classical degenerations n = 0 and M = 0 through the same code path",
              [](Outcome& out) {
                  for (const auto& c : kMainGrid) {
                      if (c.n != 0 && c.M != 0)
                          continue;
                      Signature sig(c.M, c.n);
                      out.absorb(verify_annihilation(sig, c.m, {0, 1}));
                      out.absorb(integral_rational_equivalence(sig, c.m));
                  }
                  out.absorb(verify_commutativity(Signature(3, 0), {2, 3}));
                  out.absorb(verify_commutativity(Signature(0, 1), {2, 3}));
              });

    criterion(9, "psi binomial relations (k = m = 2) and centrality of ev_z(phi_2)",
              [](Outcome& out) {
                  out.absorb(psi_relation_check(Signature(3, 0), 2, 2));
                  out.absorb(psi_relation_check(Signature(5, 0), 2, 2));
                  for (Signature sig : {Signature(1, 1), Signature(0, 1)}) {
                      out.absorb(ev_centrality_check(sig, 2, Rational(1)));
                      out.absorb(ev_centrality_check(sig, 2, Rational(2)));
                  }
              });

    std::cout << (g_failures == 0 ? "ACCEPTANCE: all criteria passed\n"
                                  : "ACCEPTANCE: criteria failed\n");
    return g_failures;
}
