#include "stacks/genericity.hpp"

#include <sstream>

namespace charstack {

std::string GenericityWitness::to_string() const {
    if (generic) return "generic";
    std::ostringstream out;
    if (det_failed) {
        out << "determinant product != 1";
    } else {
        out << "r=" << r << " selection sums";
        for (long s : selection) out << " " << s;
        out << " add to 0";
    }
    if (zeta_exp >= 0) out << " (zeta exponent " << zeta_exp << ")";
    return out.str();
}

namespace {

// Achievable sums of exactly r eigenvalues of one class (with multiplicity),
// as a bitmap over Z/N.
std::vector<std::vector<char>> r_sums(const ClassDatum& c) {
    size_t N = static_cast<size_t>(c.modulus);
    int n = c.n;
    std::vector<std::vector<char>> dp(static_cast<size_t>(n) + 1,
                                      std::vector<char>(N, 0));
    dp[0][0] = 1;
    for (const auto& [e, lam] : c.eigen) {
        int mult = lam.size();
        for (int used = 0; used < mult; ++used) {
            for (int r = n - 1; r >= 0; --r) {
                for (size_t s = 0; s < N; ++s) {
                    if (!dp[r][s]) continue;
                    size_t ns = (s + static_cast<size_t>(e)) % N;
                    dp[r + 1][ns] = 1;
                }
            }
        }
    }
    return dp;
}

} // namespace

bool is_generic_gln(const std::vector<ClassDatum>& classes, GenericityWitness* witness) {
    if (classes.empty()) throw std::invalid_argument("is_generic_gln: empty tuple");
    long N = classes[0].modulus;
    int n = classes[0].n;
    for (const auto& c : classes)
        if (c.modulus != N || c.n != n)
            throw std::invalid_argument("is_generic_gln: mixed n or modulus");

    long det = 0;
    for (const auto& c : classes) det = (det + det_exponent(c)) % N;
    if (det != 0) {
        if (witness) {
            witness->generic = false;
            witness->det_failed = true;
        }
        return false;
    }

    std::vector<std::vector<std::vector<char>>> per_class;
    per_class.reserve(classes.size());
    for (const auto& c : classes) per_class.push_back(r_sums(c));

    for (int r = 1; r < n; ++r) {
        // k-fold sumset of the per-class achievable r-sums
        std::vector<char> acc(static_cast<size_t>(N), 0);
        acc[0] = 1;
        for (const auto& dp : per_class) {
            std::vector<char> next(static_cast<size_t>(N), 0);
            for (long s = 0; s < N; ++s) {
                if (!acc[s]) continue;
                for (long x = 0; x < N; ++x)
                    if (dp[r][x]) next[(s + x) % N] = 1;
            }
            acc = std::move(next);
        }
        if (acc[0]) {
            if (witness) {
                witness->generic = false;
                witness->det_failed = false;
                witness->r = r;
                // reconstruct one selection: walk classes backwards
                witness->selection.assign(classes.size(), 0);
                long needed = 0; // target sum of remaining classes (mod N)
                // forward prefixes
                std::vector<std::vector<char>> prefix;
                std::vector<char> run(static_cast<size_t>(N), 0);
                run[0] = 1;
                prefix.push_back(run);
                for (const auto& dp : per_class) {
                    std::vector<char> next(static_cast<size_t>(N), 0);
                    for (long s = 0; s < N; ++s) {
                        if (!run[s]) continue;
                        for (long x = 0; x < N; ++x)
                            if (dp[r][x]) next[(s + x) % N] = 1;
                    }
                    run = std::move(next);
                    prefix.push_back(run);
                }
                long target = 0;
                for (size_t i = classes.size(); i-- > 0;) {
                    for (long x = 0; x < N; ++x) {
                        long before = ((target - x) % N + N) % N;
                        if (per_class[i][r][x] && prefix[i][before]) {
                            witness->selection[i] = x;
                            target = before;
                            break;
                        }
                    }
                }
                (void)needed;
            }
            return false;
        }
    }
    if (witness) witness->generic = true;
    return true;
}

} // namespace charstack
