#include "leosys/params.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace leosys {

FieldElement ParameterArray::varphi_product() const {
    FieldElement acc = FieldElement::one(field);
    for (const auto& v : varphi) acc = acc * v;
    return acc;
}

FieldElement ParameterArray::phi_product() const {
    FieldElement acc = FieldElement::one(field);
    for (const auto& v : phi) acc = acc * v;
    return acc;
}

std::optional<Beta> ParameterArray::beta() const {
    return beta_from_sequence(RecurrentSequence{theta});
}

void ParameterArray::check_lengths() const {
    if (d < 0) throw Error("negative diameter");
    auto n = static_cast<std::size_t>(d);
    if (theta.size() != n + 1 || theta_star.size() != n + 1 || varphi.size() != n ||
        phi.size() != n)
        throw Error("parameter list lengths do not match d");
}

std::string condition_text(Condition c) {
    switch (c) {
        case Condition::I: return "i";
        case Condition::II: return "ii";
        case Condition::III: return "iii";
        case Condition::IV: return "iv";
        case Condition::V: return "v";
    }
    return "?";
}

std::string ValidationReport::to_string() const {
    std::ostringstream os;
    os << (valid ? "valid" : "invalid") << "\n";
    for (const auto& v : violations)
        os << "violation (" << condition_text(v.condition) << ") at index " << v.index << ": "
           << v.detail << "\n";
    return os.str();
}

ValidationReport validate(const ParameterArray& pa) {
    pa.check_lengths();
    ValidationReport report;
    auto flag = [&](Condition c, long index, std::string detail) {
        report.valid = false;
        report.violations.push_back({c, index, std::move(detail)});
    };
    const long d = pa.d;
    auto th = [&](long i) { return pa.theta[static_cast<std::size_t>(i)]; };
    auto ts = [&](long i) { return pa.theta_star[static_cast<std::size_t>(i)]; };
    auto vp = [&](long i) { return pa.varphi[static_cast<std::size_t>(i - 1)]; };
    auto ph = [&](long i) { return pa.phi[static_cast<std::size_t>(i - 1)]; };

    // (i)
    for (long i = 1; i <= d; ++i) {
        if (vp(i).is_zero()) flag(Condition::I, i, "varphi_" + std::to_string(i) + " = 0");
        if (ph(i).is_zero()) flag(Condition::I, i, "phi_" + std::to_string(i) + " = 0");
    }
    // (ii)
    bool distinct = true;
    for (long i = 0; i <= d; ++i)
        for (long j = i + 1; j <= d; ++j) {
            if (th(i) == th(j)) {
                distinct = false;
                flag(Condition::II, j,
                     "theta_" + std::to_string(i) + " = theta_" + std::to_string(j));
            }
            if (ts(i) == ts(j)) {
                distinct = false;
                flag(Condition::II, j,
                     "theta*_" + std::to_string(i) + " = theta*_" + std::to_string(j));
            }
        }

    // (iii), (iv) need θ_0 ≠ θ_d; (v) needs consecutive entries distinct.
    if (distinct && d >= 1) {
        FieldElement span = th(0) - th(d);
        FieldElement sum = FieldElement::zero(pa.field);
        for (long i = 1; i <= d; ++i) {
            sum = sum + (th(i - 1) - th(d - i + 1)) / span;
            FieldElement rhs3 = ph(1) * sum + (ts(i) - ts(0)) * (th(i - 1) - th(d));
            if (!(vp(i) == rhs3))
                flag(Condition::III, i, "varphi_" + std::to_string(i) + " != " + rhs3.to_string());
            FieldElement rhs4 = vp(1) * sum + (ts(i) - ts(0)) * (th(d - i + 1) - th(0));
            if (!(ph(i) == rhs4))
                flag(Condition::IV, i, "phi_" + std::to_string(i) + " != " + rhs4.to_string());
        }
        std::optional<FieldElement> common;
        for (long i = 2; i <= d - 1; ++i) {
            FieldElement r1 = (th(i - 2) - th(i + 1)) / (th(i - 1) - th(i));
            FieldElement r2 = (ts(i - 2) - ts(i + 1)) / (ts(i - 1) - ts(i));
            if (!(r1 == r2)) {
                flag(Condition::V, i, "eigenvalue and dual eigenvalue ratios differ");
                continue;
            }
            if (common && !(*common == r1))
                flag(Condition::V, i, "ratio depends on i");
            common = r1;
        }
    }
    return report;
}

const std::vector<D4Element>& D4Element::all() {
    static const std::vector<D4Element> elems = [] {
        std::vector<D4Element> out;
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                for (int c = 0; c < 2; ++c) out.push_back(D4Element(a, b, c));
        return out;
    }();
    return elems;
}

D4Element D4Element::compose(const D4Element& then) const {
    // In the normal form ↓^a ⇓^b *^c, a trailing * swaps the roles of ↓ and
    // ⇓ in the word that follows it.
    bool a2 = then.down_, b2 = then.ddown_;
    if (star_) std::swap(a2, b2);
    return D4Element(down_ != a2, ddown_ != b2, star_ != then.star_);
}

D4Element D4Element::inverse() const {
    for (const auto& g : all())
        if (compose(g) == identity()) return g;
    throw Error("unreachable: D4 element without inverse");
}

std::string D4Element::to_string() const {
    std::string s;
    if (down_) s += "↓";
    if (ddown_) s += "⇓";
    if (star_) s += "*";
    return s.empty() ? "1" : s;
}

namespace {

std::vector<FieldElement> reversed(std::vector<FieldElement> v) {
    std::reverse(v.begin(), v.end());
    return v;
}

ParameterArray apply_star(ParameterArray pa) {
    std::swap(pa.theta, pa.theta_star);
    pa.phi = reversed(std::move(pa.phi));
    return pa;
}

ParameterArray apply_down(ParameterArray pa) {
    pa.theta_star = reversed(std::move(pa.theta_star));
    std::swap(pa.varphi, pa.phi);
    pa.varphi = reversed(std::move(pa.varphi));
    pa.phi = reversed(std::move(pa.phi));
    return pa;
}

ParameterArray apply_ddown(ParameterArray pa) {
    pa.theta = reversed(std::move(pa.theta));
    std::swap(pa.varphi, pa.phi);
    return pa;
}

}  // namespace

ParameterArray relative(const ParameterArray& pa, const D4Element& g) {
    ParameterArray out = pa;
    if (g.has_down()) out = apply_down(std::move(out));
    if (g.has_ddown()) out = apply_ddown(std::move(out));
    if (g.has_star()) out = apply_star(std::move(out));
    return out;
}

std::pair<std::vector<FieldElement>, std::vector<FieldElement>> local_scalars(
    const ParameterArray& pa) {
    const long d = pa.d;
    auto th = [&](long i) { return pa.theta[static_cast<std::size_t>(i)]; };
    auto ts = [&](long i) { return pa.theta_star[static_cast<std::size_t>(i)]; };
    // φ_0 = φ_{d+1} = ϕ_0 = ϕ_{d+1} = 0, so the boundary fractions with
    // indeterminate denominators are exact zeros and simply dropped.
    auto vp = [&](long i) {
        return (i >= 1 && i <= d) ? pa.varphi[static_cast<std::size_t>(i - 1)]
                                  : FieldElement::zero(pa.field);
    };
    auto ph = [&](long i) {
        return (i >= 1 && i <= d) ? pa.phi[static_cast<std::size_t>(i - 1)]
                                  : FieldElement::zero(pa.field);
    };

    std::vector<FieldElement> a, a_star;
    for (long i = 0; i <= d; ++i) {
        FieldElement lhs = th(i);
        FieldElement rhs = th(d - i);
        if (i >= 1) {
            lhs = lhs + vp(i) / (ts(i) - ts(i - 1));
            rhs = rhs + ph(i) / (ts(i) - ts(i - 1));
        }
        if (i <= d - 1) {
            lhs = lhs + vp(i + 1) / (ts(i) - ts(i + 1));
            rhs = rhs + ph(i + 1) / (ts(i) - ts(i + 1));
        }
        if (!(lhs == rhs))
            throw Error("local scalar a_" + std::to_string(i) +
                        " expressions disagree; array is not a Leonard system");
        a.push_back(lhs);
    }
    for (long i = 0; i <= d; ++i) {
        FieldElement lhs = ts(i);
        FieldElement rhs = ts(d - i);
        if (i >= 1) {
            lhs = lhs + vp(i) / (th(i) - th(i - 1));
            rhs = rhs + ph(d - i + 1) / (th(i) - th(i - 1));
        }
        if (i <= d - 1) {
            lhs = lhs + vp(i + 1) / (th(i) - th(i + 1));
            rhs = rhs + ph(d - i) / (th(i) - th(i + 1));
        }
        if (!(lhs == rhs))
            throw Error("local scalar a*_" + std::to_string(i) +
                        " expressions disagree; array is not a Leonard system");
        a_star.push_back(lhs);
    }
    return {std::move(a), std::move(a_star)};
}

namespace {

std::string strip_comment(const std::string& line) {
    auto hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
}

std::vector<FieldElement> parse_elements(const std::string& text, const FieldDescriptor& desc) {
    std::vector<FieldElement> out;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) out.push_back(parse_element(tok, desc));
    return out;
}

}  // namespace

ParameterArray read_parameter_file(std::istream& in) {
    std::map<std::string, std::string> entries;
    std::string line;
    while (std::getline(in, line)) {
        line = strip_comment(line);
        auto colon = line.find(':');
        if (colon == std::string::npos) {
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                throw ParseError("bad parameter file line: " + line);
            continue;
        }
        std::string key = line.substr(0, colon);
        key.erase(0, key.find_first_not_of(" \t"));
        key.erase(key.find_last_not_of(" \t\r") + 1);
        if (entries.count(key)) throw ParseError("duplicate key: " + key);
        entries[key] = line.substr(colon + 1);
    }
    for (const char* key : {"field", "d", "theta", "theta_star", "varphi", "phi"})
        if (!entries.count(key)) throw ParseError(std::string("missing key: ") + key);

    ParameterArray pa;
    pa.field = FieldDescriptor::parse(entries["field"]);
    try {
        std::string dtext = entries["d"];
        dtext.erase(std::remove_if(dtext.begin(), dtext.end(),
                                   [](unsigned char c) { return std::isspace(c); }),
                    dtext.end());
        pa.d = std::stol(dtext);
    } catch (const std::exception&) {
        throw ParseError("bad d: " + entries["d"]);
    }
    pa.theta = parse_elements(entries["theta"], pa.field);
    pa.theta_star = parse_elements(entries["theta_star"], pa.field);
    pa.varphi = parse_elements(entries["varphi"], pa.field);
    pa.phi = parse_elements(entries["phi"], pa.field);
    try {
        pa.check_lengths();
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
    return pa;
}

void write_parameter_file(std::ostream& out, const ParameterArray& pa) {
    auto write_row = [&](const char* key, const std::vector<FieldElement>& v) {
        out << key << ":";
        for (const auto& x : v) out << ' ' << x.to_string();
        out << '\n';
    };
    out << "field: " << pa.field.to_string() << '\n';
    out << "d: " << pa.d << '\n';
    write_row("theta", pa.theta);
    write_row("theta_star", pa.theta_star);
    write_row("varphi", pa.varphi);
    write_row("phi", pa.phi);
}

}  // namespace leosys
