#include "stablerep/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <set>
#include <thread>

#include "stablerep/fp_module.hpp"
#include "stablerep/plethysm.hpp"
#include "stablerep/schur_eval.hpp"

namespace stablerep::verify {

namespace {

using Clock = std::chrono::steady_clock;

class Timer {
public:
    explicit Timer(CheckResult& r) : result_(r), start_(Clock::now()) {}
    ~Timer() {
        result_.seconds =
            std::chrono::duration_cast<std::chrono::duration<double>>(Clock::now() - start_)
                .count();
    }

private:
    CheckResult& result_;
    Clock::time_point start_;
};

std::string point_tag(int p, const Partition& nu, int l) {
    return "p=" + std::to_string(p) + " nu=" + nu.to_string() + " l=" + std::to_string(l);
}

StableElement random_element(std::mt19937_64& rng, int p, bool height_zero) {
    StableElement e(p);
    const int terms = 1 + static_cast<int>(rng() % 3);
    for (int t = 0; t < terms; ++t) {
        const int coeff = static_cast<int>(rng() % 19) - 9;
        e.add_term(static_cast<int>(rng() % (p - 1)),
                   height_zero ? 0 : static_cast<int>(rng() % (p - 1)), BigInt(coeff));
    }
    return e;
}

} // namespace

void CheckResult::merge(const CheckResult& other) {
    points += other.points;
    seconds += other.seconds;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

CheckResult check_projectivity(int p) {
    CheckResult r;
    r.name = "projectivity closed form vs decomposition";
    Timer timer(r);
    for (const Partition& nu : partitions_smaller_than(p)) {
        for (int l = 0; l <= p - 2; ++l) {
            ++r.points;
            const bool closed = is_projective_closed_form(nu, l, p);
            const bool computed = decompose_plethysm(nu, l, p).projective;
            if (closed != computed) {
                r.failures.push_back(point_tag(p, nu, l) + ": closed form says " +
                                     (closed ? "projective" : "non-projective") +
                                     ", decomposition says otherwise");
            }
        }
    }
    return r;
}

CheckResult check_case_list_full(int p) {
    CheckResult r;
    r.name = "stable irreducibility case list vs decomposition";
    Timer timer(r);
    for (const Partition& nu : partitions_smaller_than(p)) {
        for (int l = 0; l <= p - 2; ++l) {
            ++r.points;
            const PlethysmResult d = decompose_plethysm(nu, l, p);
            const ClassCase c = classify_stably_irreducible(nu, l, p);
            if ((c != ClassCase::Neither) != d.stably_irreducible) {
                r.failures.push_back(point_tag(p, nu, l) + ": case list says " +
                                     class_case_label(c) + ", decomposition " +
                                     d.decomposition.to_string());
            }
            // conjugation involution between (nu, l) and (nu', p-l-2)
            const PlethysmResult conj = decompose_plethysm(nu.conjugate(), p - l - 2, p);
            if (conj.stably_irreducible != d.stably_irreducible ||
                conj.projective != d.projective) {
                r.failures.push_back(point_tag(p, nu, l) +
                                     ": conjugate involution breaks flags");
            }
            // every surviving summand is an honest irreducible: height zero
            for (const auto& [key, coeff] : d.decomposition.terms()) {
                if (key.first != 0) {
                    r.failures.push_back(point_tag(p, nu, l) + ": summand at nonzero height");
                }
            }
        }
    }
    if (p == 7) {
        if (!decompose_plethysm(Partition({2, 2, 2}), 3, 7).stably_irreducible ||
            !decompose_plethysm(Partition({3, 3}), 2, 7).stably_irreducible) {
            r.failures.push_back("p=7: a rectangular positive is not stably irreducible");
        }
    }
    return r;
}

CheckResult check_case_list_reduced(int p) {
    CheckResult r;
    r.name = "reduced case list vs decomposition";
    Timer timer(r);
    for (const Partition& nu : partitions_smaller_than(p)) {
        for (int l = 0; l <= p - 2; ++l) {
            if (!is_pl_small(nu, p, l)) continue;
            ++r.points;
            const bool flag = decompose_plethysm(nu, l, p).stably_irreducible;
            const ClassCase c = classify_pl_small(nu, l, p);
            if ((c != ClassCase::Neither) != flag) {
                r.failures.push_back(point_tag(p, nu, l) + ": reduced case list says " +
                                     class_case_label(c) + ", flag " +
                                     (flag ? "irreducible" : "not"));
            }
        }
    }
    return r;
}

CheckResult check_multiset_criterion(int p) {
    CheckResult r;
    r.name = "multiset criterion vs decomposition";
    Timer timer(r);
    for (const Partition& nu : partitions_smaller_than(p)) {
        for (int l = 0; l <= p - 2; ++l) {
            if (!is_pl_small(nu, p, l)) continue;
            ++r.points;
            const auto witness = multiset_criterion(nu, l, p);
            const bool flag = decompose_plethysm(nu, l, p).stably_irreducible;
            if (witness.has_value() != flag) {
                r.failures.push_back(point_tag(p, nu, l) + ": criterion " +
                                     (witness ? "i=" + std::to_string(*witness) : "absent") +
                                     " but decomposition says " + (flag ? "irreducible" : "not"));
            }
        }
    }
    return r;
}

CheckResult check_twisted_projectivity(int p) {
    CheckResult r;
    r.name = "twisted projectivity dispatch";
    Timer timer(r);
    for (const Partition& nu : partitions_smaller_than(p)) {
        for (int l = 0; l <= p - 2; ++l) {
            for (int omega = 0; omega <= p - 2; ++omega) {
                ++r.points;
                const bool predicted = is_projective_twisted(nu, l, omega, p);
                const bool computed = decompose_twisted(nu, l, omega, p).projective;
                if (predicted != computed) {
                    r.failures.push_back(point_tag(p, nu, l) + " omega=" +
                                         std::to_string(omega) + ": projectivity mismatch");
                }
            }
        }
    }
    return r;
}

CheckResult check_twisted_irreducibility(int p) {
    CheckResult r;
    r.name = "twisted stable irreducibility dispatch";
    Timer timer(r);
    for (const Partition& nu : partitions_smaller_than(p)) {
        for (int l = 0; l <= p - 2; ++l) {
            for (int omega = 0; omega <= p - 2; ++omega) {
                ++r.points;
                const bool predicted = is_stably_irreducible_twisted(nu, l, omega, p);
                const bool computed = decompose_twisted(nu, l, omega, p).stably_irreducible;
                if (predicted != computed) {
                    r.failures.push_back(point_tag(p, nu, l) + " omega=" +
                                         std::to_string(omega) +
                                         ": stable irreducibility mismatch");
                }
                // one extra twist conjugates the shape and shifts by |nu|
                if (omega <= p - 3 &&
                    heller_interchange(nu, l, omega + 1, p) !=
                        heller(heller_interchange(nu.conjugate(), l, omega, p), nu.size())) {
                    r.failures.push_back(point_tag(p, nu, l) + " omega=" +
                                         std::to_string(omega) + ": interchange identity fails");
                }
            }
        }
    }
    return r;
}

CheckResult check_hook_content_paths(int p) {
    CheckResult r;
    r.name = "hook content quotient vs tableau census";
    Timer timer(r);
    for (const Partition& nu : partitions_smaller_than(p)) {
        for (int l = 0; l <= p - 2; ++l) {
            ++r.points;
            const LaurentPoly quotient = shcf_laurent(nu, l, p);
            const LaurentPoly census = ssyt_specialization(nu, l);
            if (quotient != census) {
                r.failures.push_back(point_tag(p, nu, l) + ": quotient " + quotient.to_string() +
                                     " != census " + census.to_string());
            }
        }
    }
    return r;
}

CheckResult check_oracle(int p, long long budget, int max_size, int jobs) {
    CheckResult r;
    r.name = "matrix oracle vs decomposition";
    Timer timer(r);

    struct Point {
        Partition nu;
        int l;
        long long dim;
    };
    std::vector<Point> points;
    for (const Partition& nu : partitions_smaller_than(p)) {
        if (nu.size() > max_size) continue;
        for (int l = 0; l <= p - 2; ++l) {
            long long dim = 1;
            bool fits = true;
            for (long long k = 0; k < nu.size(); ++k) {
                dim *= l + 1;
                if (dim > budget) {
                    fits = false;
                    break;
                }
            }
            if (fits) points.push_back({nu, l, dim});
        }
    }
    r.points = static_cast<long long>(points.size());

    // Heaviest points first so the workers stay balanced; failures are
    // reported in the deterministic point order regardless.
    std::vector<size_t> order(points.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](size_t a, size_t b) { return points[a].dim > points[b].dim; });

    std::vector<std::string> failure_at(points.size());
    std::atomic<size_t> next{0};
    const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(points.size())));
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            while (true) {
                const size_t slot = next.fetch_add(1);
                if (slot >= order.size()) return;
                const Point& pt = points[order[slot]];
                std::string fail;
                try {
                    const FpModule module =
                        schur_apply(pt.nu, build_sym(pt.l, p), std::max(budget, pt.dim));
                    const StableElement from_matrices = green_transport(decompose_kN(module));
                    const StableElement from_ring =
                        decompose_plethysm(pt.nu, pt.l, p).decomposition;
                    if (from_matrices != from_ring) {
                        fail = point_tag(p, pt.nu, pt.l) + ": oracle " +
                               from_matrices.to_string() + " != ring " + from_ring.to_string();
                    }
                } catch (const std::exception& e) {
                    fail = point_tag(p, pt.nu, pt.l) + ": exception: " + e.what();
                }
                failure_at[order[slot]] = fail;
            }
        });
    }
    for (auto& t : pool) t.join();
    for (const std::string& f : failure_at) {
        if (!f.empty()) r.failures.push_back(f);
    }

    if (p <= 7) {
        // transport of tensor products matches ring multiplication
        for (int l1 = 0; l1 <= p - 2; ++l1) {
            for (int l2 = l1; l2 <= p - 2; ++l2) {
                ++r.points;
                const StableElement lhs =
                    green_transport(decompose_kN(tensor(build_sym(l1, p), build_sym(l2, p))));
                const StableElement rhs =
                    cg_multiply(StableElement::basis(p, l1, 0), StableElement::basis(p, l2, 0));
                if (lhs != rhs) {
                    r.failures.push_back("p=" + std::to_string(p) + " tensor " +
                                         std::to_string(l1) + "," + std::to_string(l2) +
                                         ": transport mismatch");
                }
            }
        }
    }
    return r;
}

CheckResult check_ring_structure(int p, uint64_t seed, int random_elements) {
    CheckResult r;
    r.name = "ring structure";
    Timer timer(r);
    std::mt19937_64 rng(seed * 1000003ULL + static_cast<uint64_t>(p));

    for (int iter = 0; iter < random_elements; ++iter) {
        ++r.points;
        const StableElement a = random_element(rng, p, false);
        const StableElement b = random_element(rng, p, false);
        if (psi_from_presentation(psi_to_presentation(a)) != a) {
            r.failures.push_back("p=" + std::to_string(p) + ": presentation round trip fails on " +
                                 a.to_string());
        }
        if (psi_to_presentation(cg_multiply(a, b)) !=
            psi_to_presentation(a) * psi_to_presentation(b)) {
            r.failures.push_back("p=" + std::to_string(p) +
                                 ": presentation multiplicativity fails");
        }
        const StableElement a0 = random_element(rng, p, true);
        const StableElement b0 = random_element(rng, p, true);
        if (theta(cg_multiply(a0, b0)) != theta(a0) * theta(b0)) {
            r.failures.push_back("p=" + std::to_string(p) + ": homomorphism property fails");
        }
    }

    for (int j = 1; j <= p - 1; ++j) {
        ++r.points;
        if (g_unit(p, j) != -g_unit(p, p - j)) {
            r.failures.push_back("p=" + std::to_string(p) + ": unit negation fails at j=" +
                                 std::to_string(j));
        }
    }

    // syzygy orbits on uniserial labels: p-1 orbits of size p-1 with the
    // diagonal labels as representatives, covering everything
    std::set<std::pair<int, int>> covered;
    for (int l = 0; l <= p - 2; ++l) {
        ++r.points;
        int i = l, j = l;
        for (int step = 1; step <= p - 1; ++step) {
            std::tie(i, j) = omega_uniserial(i, j, p);
            covered.insert({i, j});
            if ((i == l && j == l) != (step == p - 1)) {
                r.failures.push_back("p=" + std::to_string(p) + ": orbit of U_{" +
                                     std::to_string(l) + "," + std::to_string(l) +
                                     "} has wrong size");
                break;
            }
        }
    }
    if (covered.size() != static_cast<size_t>((p - 1) * (p - 1))) {
        r.failures.push_back("p=" + std::to_string(p) + ": orbits do not cover all labels");
    }
    return r;
}

CheckResult check_worked_examples() {
    CheckResult r;
    r.name = "worked examples";
    Timer timer(r);
    auto expect = [&](bool cond, const std::string& what) {
        ++r.points;
        if (!cond) r.failures.push_back(what);
    };

    expect(hooks(Partition({4, 3, 1})) == IntMultiset{1, 1, 1, 2, 3, 4, 4, 6},
           "hook multiset of (4,3,1)");
    expect(shifted_contents(Partition({4, 3, 1}), 0) == IntMultiset{-2, -1, 0, 0, 1, 1, 2, 3},
           "content multiset of (4,3,1)");
    expect(shifted_contents(Partition({4, 3, 1}), 3) == IntMultiset{1, 2, 3, 3, 4, 4, 5, 6},
           "contents of (4,3,1) shifted by 3");

    {
        // lambda^3 and the (2,1) Schur evaluation of 2z^2 + 1 + 2z^-2,
        // faithful at p = 13
        const int p = 13;
        PowerMultiset f(p);
        f.add(2, 2);
        f.add(0, 1);
        f.add(-2, 2);
        CycInt lam3(p);
        lam3.add_zeta_multiple(4, BigInt(1));
        lam3.add_zeta_multiple(2, BigInt(2));
        lam3.add_zeta_multiple(0, BigInt(4));
        lam3.add_zeta_multiple(-2, BigInt(2));
        lam3.add_zeta_multiple(-4, BigInt(1));
        expect(lambda_op(f, 3) == lam3, "third exterior operation on 2z^2+1+2z^-2");

        CycInt s21(p);
        s21.add_zeta_multiple(6, BigInt(2));
        s21.add_zeta_multiple(4, BigInt(4));
        s21.add_zeta_multiple(2, BigInt(10));
        s21.add_zeta_multiple(0, BigInt(8));
        s21.add_zeta_multiple(-2, BigInt(10));
        s21.add_zeta_multiple(-4, BigInt(4));
        s21.add_zeta_multiple(-6, BigInt(2));
        expect(giambelli_op(Partition({2, 1}), f) == s21, "(2,1) evaluation of 2z^2+1+2z^-2");
    }

    for (int p : {3, 5, 7, 11, 13}) {
        expect(cg_multiply(StableElement::basis(p, p - 2, 0), StableElement::basis(p, p - 2, 0)) ==
                   StableElement::one(p),
               "top symmetric power squares to the identity, p=" + std::to_string(p));
    }

    {
        // the p = 7 worked tensor product
        StableElement product =
            cg_multiply(StableElement::basis(7, 2, 2), StableElement::basis(7, 3, 1));
        StableElement expected(7);
        expected.add_term(5, 3, BigInt(1));
        expected.add_term(3, 3, BigInt(1));
        expected.add_term(1, 3, BigInt(1));
        expect(product == expected, "p=7 worked tensor product");

        // the two tables, cell for cell
        const std::vector<std::vector<std::string>> table1{
            {"\xCE\xA9^5 k", "\xCE\xA9^5(Sym^2 E)", "\xCE\xA9^5(Sym^4 E)"},
            {"\xCE\xA9^4 k", "\xCE\xA9^4(Sym^2 E)", "\xCE\xA9^4(Sym^4 E)"},
            {"\xCE\xA9^3 k", "\xCE\xA9^3(Sym^2 E)", "\xCE\xA9^3(Sym^4 E)"},
            {"\xCE\xA9^2 k", "\xCE\xA9^2(Sym^2 E)", "\xCE\xA9^2(Sym^4 E)"},
            {"\xCE\xA9 k", "\xCE\xA9(Sym^2 E)", "\xCE\xA9(Sym^4 E)"},
            {"k", "Sym^2 E", "Sym^4 E"}};
        const std::vector<std::vector<std::string>> table2{
            {"\xCE\xA9^5(Sym^5 E)", "\xCE\xA9^5(Sym^3 E)", "\xCE\xA9^5 E"},
            {"\xCE\xA9^4(Sym^5 E)", "\xCE\xA9^4(Sym^3 E)", "\xCE\xA9^4 E"},
            {"\xCE\xA9^3(Sym^5 E)", "\xCE\xA9^3(Sym^3 E)", "\xCE\xA9^3 E"},
            {"\xCE\xA9^2(Sym^5 E)", "\xCE\xA9^2(Sym^3 E)", "\xCE\xA9^2 E"},
            {"\xCE\xA9(Sym^5 E)", "\xCE\xA9(Sym^3 E)", "\xCE\xA9 E"},
            {"Sym^5 E", "Sym^3 E", "E"}};
        const HeightPositionTables tabs = height_position_tables(7);
        bool cells_ok = true;
        for (int h = 5; h >= 0; --h) {
            for (int c = 0; c <= 2; ++c) {
                const BasisIndex t1 = tabs.cells[0][h][c];
                const BasisIndex t2 = tabs.cells[1][h][c];
                cells_ok &= render_basis_label(t1.l, t1.m) == table1[5 - h][c];
                cells_ok &= render_basis_label(t2.l, t2.m) == table2[5 - h][c];
            }
        }
        expect(cells_ok, "p=7 height/position tables, cell for cell");
    }
    return r;
}

} // namespace stablerep::verify
