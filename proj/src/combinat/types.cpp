#include "combinat/types.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace charstack {

TypeT::TypeT(std::vector<TypeEntry> entries) : entries_(std::move(entries)) {
    for (const auto& e : entries_) {
        if (e.d < 1) throw std::invalid_argument("type degree must be >= 1");
        if (e.lambda.empty()) throw std::invalid_argument("type partitions must be nonempty");
        if (e.mult < 1) throw std::invalid_argument("type multiplicity must be >= 1");
    }
    std::sort(entries_.begin(), entries_.end(),
              [](const TypeEntry& a, const TypeEntry& b) {
                  return std::tie(a.d, a.lambda) < std::tie(b.d, b.lambda);
              });
    // merge duplicate keys
    std::vector<TypeEntry> merged;
    for (const auto& e : entries_) {
        if (!merged.empty() && merged.back().d == e.d && merged.back().lambda == e.lambda)
            merged.back().mult += e.mult;
        else
            merged.push_back(e);
    }
    entries_ = std::move(merged);
}

int TypeT::size() const {
    int s = 0;
    for (const auto& e : entries_) s += e.mult * e.d * e.lambda.size();
    return s;
}

bool TypeT::is_split() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const TypeEntry& e) { return e.d == 1; });
}

TypeT TypeT::dual() const {
    std::vector<TypeEntry> es = entries_;
    for (auto& e : es) e.lambda = e.lambda.conjugate();
    return TypeT(std::move(es));
}

TypeT TypeT::psi(int d) const {
    if (d < 1) throw std::invalid_argument("psi_d: d >= 1 required");
    std::vector<TypeEntry> es = entries_;
    for (auto& e : es) e.d *= d;
    return TypeT(std::move(es));
}

TypeT TypeT::divide(int r) const {
    if (r < 1) throw std::invalid_argument("divide_type: r >= 1 required");
    std::vector<TypeEntry> es = entries_;
    for (auto& e : es) {
        if (e.mult % r != 0)
            throw std::domain_error("r does not divide a multiplicity of the type");
        e.mult /= r;
    }
    return TypeT(std::move(es));
}

std::string TypeT::to_string() const {
    std::ostringstream out;
    out << "{";
    for (size_t i = 0; i < entries_.size(); ++i) {
        if (i) out << ", ";
        const auto& e = entries_[i];
        out << "(" << e.d << "," << e.lambda.to_string() << ")";
        if (e.mult != 1) out << "^" << e.mult;
    }
    out << "}";
    return out.str();
}

namespace {
void skip_ws(const std::string& s, size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}
void expect(const std::string& s, size_t& i, char c) {
    skip_ws(s, i);
    if (i >= s.size() || s[i] != c) {
        std::ostringstream msg;
        msg << "type parse error at position " << i << ": expected '" << c << "'";
        throw std::invalid_argument(msg.str());
    }
    ++i;
}
int parse_int(const std::string& s, size_t& i) {
    skip_ws(s, i);
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i) {
        std::ostringstream msg;
        msg << "type parse error at position " << i << ": expected integer";
        throw std::invalid_argument(msg.str());
    }
    return std::stoi(s.substr(start, i - start));
}
} // namespace

TypeT TypeT::parse(const std::string& text) {
    size_t i = 0;
    std::vector<TypeEntry> entries;
    expect(text, i, '{');
    skip_ws(text, i);
    if (i < text.size() && text[i] == '}') return TypeT{};
    while (true) {
        TypeEntry e;
        expect(text, i, '(');
        e.d = parse_int(text, i);
        expect(text, i, ',');
        expect(text, i, '[');
        std::vector<int> parts;
        skip_ws(text, i);
        if (i < text.size() && text[i] != ']') {
            while (true) {
                parts.push_back(parse_int(text, i));
                skip_ws(text, i);
                if (i < text.size() && text[i] == ',') {
                    ++i;
                    continue;
                }
                break;
            }
        }
        expect(text, i, ']');
        expect(text, i, ')');
        e.lambda = Partition(std::move(parts));
        skip_ws(text, i);
        if (i < text.size() && text[i] == '^') {
            ++i;
            e.mult = parse_int(text, i);
        }
        entries.push_back(std::move(e));
        skip_ws(text, i);
        if (i < text.size() && text[i] == ',') {
            ++i;
            continue;
        }
        break;
    }
    expect(text, i, '}');
    skip_ws(text, i);
    if (i != text.size()) {
        std::ostringstream msg;
        msg << "type parse error at position " << i << ": trailing input";
        throw std::invalid_argument(msg.str());
    }
    return TypeT(std::move(entries));
}

MultiType::MultiType(std::vector<TypeT> components) : components_(std::move(components)) {
    if (components_.empty()) throw std::invalid_argument("multitype needs k >= 1 components");
    int n0 = components_[0].size();
    for (const auto& t : components_)
        if (t.size() != n0) throw std::invalid_argument("multitype components must have equal size");
}

int MultiType::n() const { return components_.empty() ? 0 : components_[0].size(); }

MultiType MultiType::dual() const {
    std::vector<TypeT> cs = components_;
    for (auto& c : cs) c = c.dual();
    return MultiType(std::move(cs));
}

std::string MultiType::to_string() const {
    std::ostringstream out;
    out << "(";
    for (size_t i = 0; i < components_.size(); ++i) {
        if (i) out << ", ";
        out << components_[i].to_string();
    }
    out << ")";
    return out.str();
}

int r_sign(const MultiType& w) {
    int r = w.k() * w.n();
    for (const auto& comp : w.components())
        for (const auto& e : comp.entries()) r += e.mult * e.lambda.size();
    return r;
}

MultiType omega_r(const MultiType& w, const std::vector<int>& r) {
    if (static_cast<int>(r.size()) != w.k())
        throw std::invalid_argument("omega_r: need one divisor per component");
    std::vector<TypeT> cs;
    cs.reserve(r.size());
    for (int i = 0; i < w.k(); ++i) cs.push_back(w.components()[i].divide(r[i]).psi(r[i]));
    return MultiType(std::move(cs));
}

} // namespace charstack
