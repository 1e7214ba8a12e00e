#include "symfunc/macdonald.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <unistd.h>

namespace charstack {

namespace {

const std::vector<std::string> kQT{"q", "t"};

std::mutex g_mtx;
std::map<Partition, MacdonaldEntry> g_entries;
std::string g_cache_dir;
bool g_cache_dir_set = false;

std::string effective_cache_dir() {
    if (g_cache_dir_set) return g_cache_dir;
    if (const char* env = std::getenv("CHARSTACK_CACHE_DIR")) return env;
    return "";
}

uint64_t fnv1a(const std::string& s) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string parts_key(const Partition& p) {
    std::string k;
    for (int x : p.parts()) {
        if (!k.empty()) k += "-";
        k += std::to_string(x);
    }
    return k.empty() ? "0" : k;
}

// One line per Schur coefficient: "mu=<parts> <eq>,<et>=<coeff> ..."
std::string serialize_entry(const MacdonaldEntry& e) {
    std::ostringstream out;
    for (const auto& [mu, c] : e.schur_coeffs) {
        if (!c.is_poly() || c.den().constant_value() != 1)
            throw std::logic_error("Macdonald coefficient is not a polynomial");
        out << "mu=" << parts_key(mu);
        for (const auto& [exp, coef] : c.num().terms())
            out << " " << exp[0] << "," << exp[1] << "=" << coef.get_str();
        out << "\n";
    }
    return out.str();
}

bool parse_entry(const std::string& payload, const Partition& lambda, MacdonaldEntry& out) {
    out.lambda = lambda;
    out.schur_coeffs.clear();
    std::istringstream in(payload);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string head;
        ls >> head;
        if (head.rfind("mu=", 0) != 0) return false;
        std::vector<int> parts;
        {
            std::string key = head.substr(3);
            if (key != "0") {
                std::istringstream ks(key);
                std::string piece;
                while (std::getline(ks, piece, '-')) parts.push_back(std::stoi(piece));
            }
        }
        MultiPoly num(kQT);
        std::string term;
        while (ls >> term) {
            size_t comma = term.find(','), eq = term.find('=');
            if (comma == std::string::npos || eq == std::string::npos) return false;
            int eq_q = std::stoi(term.substr(0, comma));
            int eq_t = std::stoi(term.substr(comma + 1, eq - comma - 1));
            Rat c(term.substr(eq + 1));
            c.canonicalize();
            num.add_term({eq_q, eq_t}, c);
        }
        out.schur_coeffs[Partition(parts)] = RatFunc::from_poly(std::move(num));
    }
    return !out.schur_coeffs.empty();
}

std::filesystem::path cache_file(const std::string& dir, const Partition& lambda) {
    return std::filesystem::path(dir) /
           ("macdonald_n" + std::to_string(lambda.size()) + "_" + parts_key(lambda) + ".txt");
}

bool load_from_disk(const Partition& lambda, MacdonaldEntry& out) {
    std::string dir = effective_cache_dir();
    if (dir.empty()) return false;
    std::ifstream in(cache_file(dir, lambda));
    if (!in) return false;
    std::string header;
    if (!std::getline(in, header)) return false;
    std::string payload((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::ostringstream expect;
    expect << "charstack-macdonald v1 hash=" << fnv1a(payload);
    if (header != expect.str()) return false; // corrupt cache entry: recompute
    return parse_entry(payload, lambda, out);
}

void store_to_disk(const MacdonaldEntry& e) {
    std::string dir = effective_cache_dir();
    if (dir.empty()) return;
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) return;
    std::string payload = serialize_entry(e);
    std::filesystem::path final_path = cache_file(dir, e.lambda);
    std::filesystem::path tmp = final_path;
    tmp += ".tmp" + std::to_string(::getpid());
    {
        std::ofstream out(tmp);
        if (!out) return;
        out << "charstack-macdonald v1 hash=" << fnv1a(payload) << "\n" << payload;
    }
    std::filesystem::rename(tmp, final_path, ec);
    if (ec) std::filesystem::remove(tmp, ec);
}

// Transition matrix of the plethystic substitution X -> X(1-v) on the Schur
// basis of the given degree; entries are polynomials in the variable `v`
// (one of q, t) inside Q(q,t).
std::vector<std::vector<RatFunc>> schur_transform_matrix(int degree, const std::string& v) {
    const Transitions& tr = transitions(degree);
    size_t np = tr.parts.size();
    RatFunc one = RatFunc::one(kQT);
    std::vector<RatFunc> scale_of_part(static_cast<size_t>(degree) + 1, one);
    for (int k = 1; k <= degree; ++k)
        scale_of_part[k] = one - RatFunc::variable(kQT, v, k);
    std::vector<std::vector<RatFunc>> m(np, std::vector<RatFunc>(np, RatFunc::zero(kQT)));
    for (size_t j = 0; j < np; ++j) {
        for (size_t rho = 0; rho < np; ++rho) {
            if (tr.p_from_s[rho][j] == 0) continue;
            RatFunc f = RatFunc::constant(kQT, tr.p_from_s[rho][j]);
            for (int part : tr.parts[rho].parts()) f = f * scale_of_part[part];
            for (size_t i = 0; i < np; ++i) {
                if (tr.s_from_p[i][rho] == 0) continue;
                m[i][j] = m[i][j] + f * tr.s_from_p[i][rho];
            }
        }
    }
    return m;
}

MacdonaldEntry solve_triangularity(const Partition& lambda) {
    int n = lambda.size();
    const Transitions& tr = transitions(n);
    size_t np = tr.parts.size();
    auto mq = schur_transform_matrix(n, "q");
    auto mt = schur_transform_matrix(n, "t");

    // Assemble integer-polynomial rows (augmented with the RHS column) by
    // clearing each row's integer denominators.
    Partition dual = lambda.conjugate();
    std::vector<std::vector<MultiPoly>> rows;
    auto push_row = [&](const std::vector<RatFunc>& src, const Rat& rhs_val) {
        Int l = 1;
        for (const auto& e : src) {
            if (e.is_zero()) continue;
            Int d = e.den().constant_value().get_num();
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
        }
        std::vector<MultiPoly> row;
        row.reserve(np + 1);
        for (const auto& e : src) {
            Rat scale = Rat(l) / (e.is_zero() ? Rat(1) : e.den().constant_value());
            row.push_back(e.num() * scale);
        }
        row.push_back(MultiPoly::constant(kQT, rhs_val * Rat(l)));
        rows.push_back(std::move(row));
    };
    for (size_t nu = 0; nu < np; ++nu) {
        if (!dominance_leq(lambda, tr.parts[nu])) push_row(mq[nu], Rat(0));
        if (!dominance_leq(dual, tr.parts[nu])) push_row(mt[nu], Rat(0));
    }
    {
        std::vector<RatFunc> norm(np, RatFunc::zero(kQT));
        norm[tr.index.at(Partition{{n}})] = RatFunc::one(kQT);
        push_row(norm, Rat(1));
    }

    // Fraction-free (Bareiss) forward elimination.
    size_t nrows = rows.size();
    if (nrows < np) throw std::logic_error("Macdonald triangularity system is underdetermined");
    MultiPoly prev = MultiPoly::constant(kQT, 1);
    for (size_t col = 0; col < np; ++col) {
        size_t sel = nrows;
        for (size_t r = col; r < nrows; ++r)
            if (!rows[r][col].is_zero()) {
                sel = r;
                break;
            }
        if (sel == nrows) throw std::logic_error("Macdonald triangularity system is singular");
        std::swap(rows[col], rows[sel]);
        const std::vector<MultiPoly>& piv = rows[col];
        for (size_t r = col + 1; r < nrows; ++r) {
            for (size_t j = col + 1; j <= np; ++j) {
                MultiPoly num = piv[col] * rows[r][j] - rows[r][col] * piv[j];
                rows[r][j] = num.is_zero() ? num : MultiPoly::divide_exact(num, prev);
            }
            rows[r][col] = MultiPoly(kQT);
        }
        prev = piv[col];
    }
    for (size_t r = np; r < nrows; ++r)
        if (!rows[r][np].is_zero())
            throw std::logic_error("Macdonald triangularity system inconsistent");

    // Back substitution over Q(q,t).
    std::vector<RatFunc> x(np, RatFunc::zero(kQT));
    for (size_t col = np; col-- > 0;) {
        RatFunc acc = RatFunc::from_poly(rows[col][np]);
        for (size_t j = col + 1; j < np; ++j)
            if (!rows[col][j].is_zero() && !x[j].is_zero())
                acc = acc - RatFunc::from_poly(rows[col][j]) * x[j];
        x[col] = acc / RatFunc::from_poly(rows[col][col]);
    }

    MacdonaldEntry e;
    e.lambda = lambda;
    for (size_t col = 0; col < np; ++col) {
        const RatFunc& c = x[col];
        if (c.is_zero()) continue;
        if (!c.is_poly() || c.den().constant_value() != 1)
            throw std::logic_error("Macdonald coefficient did not reduce to a polynomial");
        e.schur_coeffs[tr.parts[col]] = c;
    }

    // Sanity: normalization and (for small degrees) Kostka-Macdonald
    // positivity/integrality.
    if (!(e.schur_coeffs.at(Partition{{n}}) == RatFunc::one(kQT)))
        throw std::logic_error("Macdonald normalization <H~, s_(n)> != 1 violated");
    if (n <= 5) {
        for (const auto& [mu, c] : e.schur_coeffs)
            for (const auto& [exp, coef] : c.num().terms())
                if (!is_integer(coef) || coef < 0)
                    throw std::logic_error("Macdonald coefficients must be in N[q,t]");
    }
    return e;
}

} // namespace

void set_macdonald_cache_dir(const std::string& dir) {
    std::lock_guard<std::mutex> lock(g_mtx);
    g_cache_dir = dir;
    g_cache_dir_set = true;
}

std::string macdonald_cache_dir() {
    std::lock_guard<std::mutex> lock(g_mtx);
    return effective_cache_dir();
}

void macdonald_clear_memory_cache() {
    std::lock_guard<std::mutex> lock(g_mtx);
    g_entries.clear();
}

const MacdonaldEntry& modified_macdonald(const Partition& lambda, int max_degree) {
    if (lambda.size() < 1) throw std::invalid_argument("modified_macdonald: |lambda| >= 1");
    if (lambda.size() > max_degree)
        throw std::invalid_argument("modified_macdonald: degree exceeds configured bound");
    std::lock_guard<std::mutex> lock(g_mtx);
    auto it = g_entries.find(lambda);
    if (it != g_entries.end()) return it->second;
    MacdonaldEntry e;
    if (!load_from_disk(lambda, e)) {
        e = solve_triangularity(lambda);
        store_to_disk(e);
    }
    return g_entries.emplace(lambda, std::move(e)).first->second;
}

} // namespace charstack
