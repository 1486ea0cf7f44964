// Acceptance suite: one line per criterion, every check exact (tolerance
// zero). Criterion 5 is the long d=3 window scan; it only runs with
// --extended (or alone with --extended-only).

#include "qwalk/qwalk.hpp"
#include "test_support.hpp"

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

using namespace qwalk;
using Clock = std::chrono::steady_clock;

int g_workers = 1;

// catalog states and search witnesses collected for criterion 8
struct TrackedState {
    std::string name;
    WaveFunction psi;
    Eigenvalue lambda;
    ShiftKind shift;
};
std::vector<TrackedState> g_eigenstates;

bool run_criterion(int number, const std::string& title, double budget_seconds,
                   const std::function<bool(std::ostringstream&)>& body) {
    std::ostringstream detail;
    auto t0 = Clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail << " exception: " << e.what();
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (secs >= budget_seconds) {
        detail << " [over budget of " << budget_seconds << "s]";
        ok = false;
    }
    std::ostringstream line;
    line << "criterion " << number << ": " << title << " ... "
         << (ok ? "PASS" : "FAIL") << " (" << secs << "s)" << detail.str();
    std::cout << line.str() << std::endl;
    return ok;
}

bool criterion1(std::ostringstream& out) {
    for (int d = 1; d <= 6; ++d)
        for (int lv : {1, -1}) {
            Eigenvalue lam(lv);
            auto psi = moving_min_state(d, lam);
            if (!eigen_residual(psi, lam, grover_coin(d), ShiftKind::moving)
                     .is_zero()) {
                out << " nonzero residual: moving d=" << d << " lambda=" << lv;
                return false;
            }
            if (psi.support_size() != (std::size_t{1} << d)) {
                out << " wrong support size: moving d=" << d;
                return false;
            }
            g_eigenstates.push_back({"moving-min d=" + std::to_string(d), psi,
                                     lam, ShiftKind::moving});
        }
    for (int d = 2; d <= 5; ++d)
        for (int lv : {1, -1}) {
            Eigenvalue lam(lv);
            auto psi = flipflop_min_state(d, lam);
            if (!eigen_residual(psi, lam, grover_coin(d), ShiftKind::flipflop)
                     .is_zero()) {
                out << " nonzero residual: flipflop d=" << d
                    << " lambda=" << lv;
                return false;
            }
            if (psi.support_size() != 4) {
                out << " wrong support size: flipflop d=" << d;
                return false;
            }
            g_eigenstates.push_back({"flipflop-min d=" + std::to_string(d),
                                     psi, lam, ShiftKind::flipflop});
        }
    return true;
}

bool criterion2(std::ostringstream& out) {
    auto via_convolution = convolve_moving_d2(nine_point_g());
    auto printed = nine_point_state();
    if (via_convolution != printed) {
        out << " convolution does not reproduce the printed table";
        return false;
    }
    if (printed.support_size() != 9) {
        out << " support size != 9";
        return false;
    }
    if (!eigen_residual(printed, Eigenvalue::plus_one(), grover_coin(2),
                        ShiftKind::moving)
             .is_zero()) {
        out << " nonzero residual";
        return false;
    }
    g_eigenstates.push_back({"nine-point", printed, Eigenvalue::plus_one(),
                             ShiftKind::moving});
    return true;
}

bool criterion3(std::ostringstream& out) {
    for (const auto& t : g_eigenstates) {
        Coin coin = grover_coin(t.psi.dim());
        Measure mu = to_measure(t.psi);
        WaveFunction cur = t.psi;
        for (int n = 1; n <= 10; ++n) {
            cur = step(cur, coin, t.shift);
            if (to_measure(cur) != mu) {
                out << " measure moved at n=" << n << " for " << t.name;
                return false;
            }
        }
    }
    return true;
}

bool certify(std::ostringstream& out, int d, ShiftKind shift, int lv,
             int max_size, int radius, std::optional<int> expect_min) {
    Eigenvalue lam(lv);
    auto r = min_support_search(d, lam, grover_coin(d), shift, max_size,
                                radius, g_workers);
    if (r.budget_exhausted) {
        out << " unexpected budget stop";
        return false;
    }
    if (r.certified_min != expect_min) {
        out << " d=" << d << " " << to_string(shift) << " lambda=" << lv
            << ": certified_min "
            << (r.certified_min ? std::to_string(*r.certified_min) : "none")
            << ", expected "
            << (expect_min ? std::to_string(*expect_min) : "none");
        return false;
    }
    if (expect_min) {
        if (!r.found) {
            out << " missing witness";
            return false;
        }
        if (!is_eigenstate(r.found->second, lam, grover_coin(d), shift)) {
            out << " witness fails re-verification";
            return false;
        }
        g_eigenstates.push_back(
            {"search witness d=" + std::to_string(d) + " " + to_string(shift),
             r.found->second, lam, shift});
    } else if (r.found) {
        out << " unexpected witness";
        return false;
    }
    return true;
}

bool criterion4(std::ostringstream& out) {
    for (int lv : {1, -1}) {
        if (!certify(out, 1, ShiftKind::moving, lv, 4, 4, 2))
            return false;
        if (!certify(out, 2, ShiftKind::moving, lv, 4, 3, 4))
            return false;
    }
    return true;
}

bool criterion5(std::ostringstream& out) {
    for (int lv : {1, -1}) {
        Eigenvalue lam(lv);
        auto r = min_support_search(3, lam, grover_coin(3), ShiftKind::moving,
                                    5, 1, g_workers);
        if (r.certified_min || r.found) {
            out << " unexpected hit below size 6 at lambda=" << lv;
            return false;
        }
        if (r.sizes_exhausted != 5) {
            out << " scan incomplete";
            return false;
        }
        // the catalog candidate {0,1}^3 admits a size-8 eigenstate
        std::vector<LatticePoint> cube;
        for (Coord x : {0, 1})
            for (Coord y : {0, 1})
                for (Coord z : {0, 1})
                    cube.push_back(LatticePoint{x, y, z});
        auto cand = canonicalize(cube);
        auto basis =
            eigen_nullspace(cand, 3, lam, grover_coin(3), ShiftKind::moving);
        bool hit = !basis.empty();
        for (const auto& p : cand.points) {
            bool covered = false;
            for (const auto& b : basis)
                covered = covered || b.contains(p);
            hit = hit && covered;
        }
        if (!hit) {
            out << " catalog candidate admits no size-8 witness at lambda="
                << lv;
            return false;
        }
        for (const auto& b : basis)
            if (!eigen_residual(b, lam, grover_coin(3), ShiftKind::moving)
                     .is_zero()) {
                out << " basis vector fails residual check";
                return false;
            }
    }
    return true;
}

bool criterion6(std::ostringstream& out) {
    for (int lv : {1, -1}) {
        if (!certify(out, 2, ShiftKind::flipflop, lv, 4, 3, 4))
            return false;
        if (!certify(out, 1, ShiftKind::flipflop, lv, 6, 8, std::nullopt))
            return false;
    }
    return true;
}

bool criterion7(std::ostringstream& out) {
    std::mt19937_64 rng(777);
    for (ShiftKind shift : {ShiftKind::moving, ShiftKind::flipflop})
        for (int d = 1; d <= 3; ++d) {
            Coin coin = grover_coin(d);
            for (int i = 0; i < 100; ++i) {
                auto a = qwalk::testing::random_state(rng, d);
                auto b = qwalk::testing::random_state(rng, d);
                if (norm_sq(step(a, coin, shift)) != norm_sq(a)) {
                    out << " norm not preserved at d=" << d << " "
                        << to_string(shift);
                    return false;
                }
                Scalar ca = qwalk::testing::random_scalar(rng);
                Scalar cb = qwalk::testing::random_scalar(rng);
                auto lhs = step(linear_combine({{ca, a}, {cb, b}}), coin, shift);
                auto rhs = linear_combine(
                    {{ca, step(a, coin, shift)}, {cb, step(b, coin, shift)}});
                if (lhs != rhs) {
                    out << " step not linear at d=" << d << " "
                        << to_string(shift);
                    return false;
                }
            }
        }
    return true;
}

bool criterion8(std::ostringstream& out) {
    if (g_eigenstates.empty()) {
        out << " no eigenstates collected";
        return false;
    }
    for (const auto& t : g_eigenstates) {
        auto neighbor = check_neighbor_property(t.psi);
        if (!neighbor.passed()) {
            out << " neighbor property violated for " << t.name;
            return false;
        }
        auto structure = check_support_structure(t.psi, t.lambda, t.shift);
        if (!structure.passed()) {
            out << " endpoint structure violated for " << t.name << ": "
                << structure.violations.front().what;
            return false;
        }
    }
    out << " [" << g_eigenstates.size() << " eigenstates, 0 violations]";
    return true;
}

bool criterion9(std::ostringstream& out) {
    using qwalk::testing::dense_rational_nullspace;
    using qwalk::testing::literal_eigen_rows;
    using qwalk::testing::state_from_vector;
    for (int size = 1; size <= 3; ++size)
        for (const auto& cand : enumerate_supports(1, 2, size))
            for (ShiftKind shift : {ShiftKind::moving, ShiftKind::flipflop})
                for (int lv : {1, -1}) {
                    auto impl = eigen_nullspace(cand, 1, Eigenvalue(lv),
                                                grover_coin(1), shift);
                    auto rows = literal_eigen_rows(cand.points, 1, lv, shift);
                    auto oracle =
                        dense_rational_nullspace(rows, cand.points.size() * 2);
                    if (impl.size() != oracle.size()) {
                        out << " dimension mismatch on a size-" << size
                            << " candidate";
                        return false;
                    }
                    for (const auto& vec : oracle) {
                        auto psi = state_from_vector(cand.points, 1, vec);
                        if (!eigen_residual(psi, Eigenvalue(lv), grover_coin(1),
                                            shift)
                                 .is_zero()) {
                            out << " oracle vector rejected by the library";
                            return false;
                        }
                    }
                    for (const auto& psi : impl)
                        for (const auto& row : rows) {
                            Rational dot = 0;
                            for (std::size_t i = 0; i < cand.points.size(); ++i)
                                for (int j = 0; j < 2; ++j)
                                    dot += row[i * 2 +
                                               static_cast<std::size_t>(j)] *
                                           psi.component(cand.points[i], j).re();
                            if (dot != 0) {
                                out << " library vector violates a literal row";
                                return false;
                            }
                        }
                }
    return true;
}

} // namespace

int main(int argc, char** argv) {
    bool extended = false, extended_only = false;
    g_workers = static_cast<int>(
        std::min(8u, std::max(1u, std::thread::hardware_concurrency())));
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--extended") == 0)
            extended = true;
        else if (std::strcmp(argv[i], "--extended-only") == 0)
            extended = extended_only = true;
        else if (std::strcmp(argv[i], "--workers") == 0 && i + 1 < argc)
            g_workers = std::atoi(argv[++i]);
        else {
            std::cerr << "usage: acceptance [--extended|--extended-only] "
                         "[--workers N]\n";
            return 2;
        }
    }

    int failures = 0;
    auto run = [&](int n, const std::string& title, double budget,
                   const std::function<bool(std::ostringstream&)>& body) {
        if (!run_criterion(n, title, budget, body))
            ++failures;
    };

    if (!extended_only) {
        run(1, "catalog eigenstate exactness", 5, criterion1);
        run(2, "nine-point reproduction", 1, criterion2);
        run(3, "stationarity of catalog measures", 10, criterion3);
        run(4, "moving-shift window certification", 120, criterion4);
    }
    if (extended)
        run(5, "moving-shift d=3 window certification (extended)", 1800,
            criterion5);
    if (!extended_only) {
        run(6, "flip-flop window certification", 120, criterion6);
        run(7, "unitarity and linearity properties", 30, criterion7);
        run(8, "structural conclusions on all produced eigenstates", 60, criterion8);
        run(9, "nullspace oracle equivalence", 60, criterion9);
    }

    if (failures) {
        std::cout << failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all criteria passed" << std::endl;
    return 0;
}
