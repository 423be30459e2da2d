// Acceptance suite: runs every contract the calculator must satisfy, one
// pass/fail line per criterion, nonzero exit on any failure.

#include "bdk/classifier.hpp"
#include "bdk/cli.hpp"
#include "bdk/errors.hpp"
#include "bdk/ktheory.hpp"
#include "bdk/spectral.hpp"
#include "bdk/verification.hpp"

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace bdk;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& description, const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    if (ok) {
        std::cout << "PASS criterion " << number << ": " << description << "\n";
    } else {
        ++g_failures;
        std::cout << "FAIL criterion " << number << ": " << description;
        if (!detail.empty()) std::cout << " [" << detail << "]";
        std::cout << "\n";
    }
}

DirectedGraph cycle(int j) {
    std::vector<std::string> ids;
    std::vector<DirectedGraph::Edge> edges;
    for (int i = 0; i < j; ++i) ids.push_back("v" + std::to_string(i));
    for (int i = 0; i < j; ++i) edges.push_back({"e" + std::to_string(i), (i + 1) % j, i});
    return DirectedGraph(std::move(ids), std::move(edges));
}

bool suite_clean(const std::string& name, const SuiteParams& params, std::string& detail) {
    const OracleReport report = run_suite(name, params);
    if (!report.passed()) {
        detail += name + ": " + std::to_string(report.failures.size()) + " failures (" +
                  report.failures.front().params + "); ";
        return false;
    }
    if (report.cases == 0) {
        detail += name + ": ran zero cases; ";
        return false;
    }
    return true;
}

} // namespace

int main() {
    criterion(1, "classical Bunce-Deddens recovery: C_1 with 2^inf", [](std::string& detail) {
        const SupernaturalNumber omega = parse_supernatural("2^inf");
        const BDInvariant inv = bd_k0_torsion_free(cycle(1), omega);
        bool ok = inv.l == 1 && inv.k1_rank_total == 1 && inv.per_copy_rank == 1;
        ok = ok && inv.unit.numerator.size() == 1 && abs(inv.unit.numerator[0]) == 1 && inv.unit.denominator == 1;
        ok = ok && equals(recover_omega(inv), omega);
        if (!ok) detail = inv.to_string();
        return ok;
    });

    criterion(2, "cycle family: l, K_1 rank, unit content, and omega round-trip", [](std::string& detail) {
        const std::vector<std::string> omegas = {"2^inf", "3*2^inf", "6^inf"};
        const long expected_l[3][4] = {{1, 2, 1, 4},   // gcd(j, 2^inf)
                                       {1, 2, 3, 4},   // gcd(j, 3*2^inf)
                                       {1, 2, 3, 4}};  // gcd(j, 6^inf)
        bool ok = true;
        for (int oi = 0; oi < 3; ++oi) {
            const SupernaturalNumber omega = parse_supernatural(omegas[oi]);
            for (int j = 1; j <= 4; ++j) {
                const BDInvariant inv = bd_k0_torsion_free(cycle(j), omega);
                const bool here = inv.l == expected_l[oi][j - 1] && inv.k1_rank_total == inv.l &&
                                  inv.per_copy_rank == 1 && content(inv.unit.numerator) == j &&
                                  equals(recover_omega(inv), omega);
                if (!here) {
                    ok = false;
                    detail += "C_" + std::to_string(j) + " with " + omegas[oi] + "; ";
                }
            }
        }
        return ok;
    });

    criterion(3, "C_1 with 3*omega matches C_3 with omega; C_1(3) = C_3", [](std::string& detail) {
        const BDInvariant a = bd_k0_torsion_free(cycle(1), parse_supernatural("3*2^inf"));
        const BDInvariant b = bd_k0_torsion_free(cycle(3), parse_supernatural("2^inf"));
        bool ok = divisibility_profile(a, 50) == divisibility_profile(b, 50);
        if (!ok) detail = "divisibility profiles differ";
        const bool matrices = vertex_matrix(block_graph(cycle(1), 3)) == vertex_matrix(cycle(3));
        if (!matrices) detail += " block matrix differs";
        return ok && matrices;
    });

    criterion(4, "kernel and cokernel of (1-A_{E(n)}^t) match (1-A^n)^t on the family", [](std::string& detail) {
        SuiteParams params; // <=3 vertices, multiplicity <=2, n <= 3
        return suite_clean("keriso", params, detail) & suite_clean("cokeriso", params, detail);
    });

    criterion(5, "connecting maps: path count equals the power sum", [](std::string& detail) {
        SuiteParams params; // n, m <= 3
        return suite_clean("connecting", params, detail);
    });

    criterion(6, "connecting maps act as multiplication by m modulo torsion", [](std::string& detail) {
        SuiteParams params;
        params.max_m = 4;
        return suite_clean("multdiagram", params, detail);
    });

    criterion(7, "saturations stabilize: T_{lm} = T_l for gcd(P/l, m) = 1", [](std::string& detail) {
        SuiteParams params;
        params.max_m = 4;
        return suite_clean("saturation", params, detail);
    });

    criterion(8, "spectral gate soundness", [](std::string& detail) {
        bool ok = true;
        for (long n = 1; n <= 12; ++n) {
            IntPolynomial prod({1});
            for (long d = 1; d <= n; ++d)
                if (n % d == 0) prod = prod * cyclotomic_poly(d);
            if (!(prod == IntPolynomial::x_power_minus_one(n))) {
                ok = false;
                detail += "cyclotomic product identity fails at n=" + std::to_string(n) + "; ";
            }
        }
        SuiteParams family; // triple agreement + Perron-Frobenius containment
        ok = ok & suite_clean("perronfrobenius", family, detail);
        SuiteParams wide;
        wide.max_vertices = 4;
        wide.max_mult = 1;
        ok = ok & suite_clean("perronfrobenius", wide, detail);
        ok = ok & suite_clean("cmkdet", family, detail);
        return ok;
    });

    criterion(9, "Smith normal form property suite: 500 seeded random matrices", [](std::string& detail) {
        SuiteParams params; // dims <= 6, |entries| <= 5, fixed seed
        return suite_clean("snf", params, detail);
    });

    criterion(10, "edge-case contract: gate exit code and torsion unit class", [](std::string& detail) {
        const std::string path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                                 "/bdk_acceptance_b2.graph";
        {
            std::ofstream f(path);
            f << "bdk-graph v1\nvertex v\nedge v v 2\n";
        }
        std::ostringstream out, err;
        const int code = cli::run({"analyze", path, "--omega", "2^inf"}, out, err);
        std::remove(path.c_str());
        bool ok = code == 1;
        if (!ok) detail = "analyze(B_2) exited " + std::to_string(code);

        // gate-passing graph with torsion unit class: A = [[2,1],[1,2]]
        std::vector<DirectedGraph::Edge> edges;
        for (int k = 0; k < 2; ++k) edges.push_back({"a" + std::to_string(k), 0, 0});
        edges.push_back({"b", 0, 1});
        edges.push_back({"c", 1, 0});
        for (int k = 0; k < 2; ++k) edges.push_back({"d" + std::to_string(k), 1, 1});
        const DirectedGraph torsion_unit({"u", "v"}, std::move(edges));
        if (!hypothesis_gate(torsion_unit).gate_passed) {
            detail += " torsion-unit graph unexpectedly fails the gate";
            return false;
        }
        const BDInvariant inv = bd_k0_torsion_free(torsion_unit, parse_supernatural("2^inf"));
        try {
            recover_omega(inv);
            detail += " recover_omega returned on a torsion unit class";
            return false;
        } catch (const UnitClassTorsion&) {
        }
        return ok;
    });

    if (g_failures == 0) {
        std::cout << "all acceptance criteria passed\n";
        return 0;
    }
    std::cout << g_failures << " acceptance criteria failed\n";
    return 1;
}
