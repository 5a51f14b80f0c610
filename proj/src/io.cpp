#include "qcl/io.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include <json.hpp>

namespace qcl {

namespace {

using ordered_json = nlohmann::ordered_json;

// Recursive descent over one line.
class ExprParser {
public:
    ExprParser(const std::string& s, std::size_t start, int line, const VarOrder& order)
        : s_(s), pos_(start), line_(line), order_(order) {}

    Poly parse() {
        Poly p = expr();
        skip();
        if (pos_ < s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

private:
    const std::string& s_;
    std::size_t pos_;
    int line_;
    const VarOrder& order_;

    [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
        throw ParseError(line_, static_cast<int>(at) + 1, msg);
    }
    [[noreturn]] void fail(const std::string& msg) const { fail(msg, pos_); }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    bool eat(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }

    std::string digits() {
        std::size_t b = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return s_.substr(b, pos_ - b);
    }

    Poly expr() {
        Poly p = term();
        while (true) {
            if (eat('+')) p += term();
            else if (eat('-')) p -= term();
            else return p;
        }
    }

    Poly term() {
        Poly p = unary();
        while (true) {
            if (eat('*')) {
                p *= unary();
            } else if (peek('/')) {
                fail("'/' is only allowed inside rational literals");
            } else {
                return p;
            }
        }
    }

    Poly unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }

    Poly power() {
        Poly base = atom();
        if (!eat('^')) return base;
        skip();
        const std::size_t at = pos_;
        bool paren = eat('(');
        skip();
        std::string d = digits();
        if (d.empty()) fail("exponent must be a non-negative integer", at);
        if (peek('/') || peek('.')) fail("non-integer exponent", at);
        if (paren && !eat(')')) fail("expected ')'");
        if (d.size() > 6) fail("exponent too large", at);
        return base.pow(static_cast<unsigned>(std::stoul(d)));
    }

    Poly atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of expression");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Poly p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t at = pos_;
            std::string num = digits();
            if (pos_ < s_.size() && s_[pos_] == '.') fail("floating literals are not allowed", at);
            std::size_t save = pos_;
            if (eat('/')) {
                skip();
                std::string den = digits();
                if (den.empty()) fail("expected denominator");
                Integer d(den);
                if (d == 0) fail("zero denominator", at);
                Rational q(Integer(num), d);
                q.canonicalize();
                return Poly(q);
            }
            pos_ = save;
            return Poly(Rational(Integer(num)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t at = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            std::string id = s_.substr(at, pos_ - at);
            int v = order_.index_of(id);
            if (v < 0) fail("undeclared variable '" + id + "'", at);
            return Poly::var(v);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }
};

bool is_ident(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

std::string coord_str(const LimitPoint& p, const Poly& c) { return p.tower.str(c); }

}  // namespace

SystemFile parse_system(const std::string& text) {
    SystemFile sys;
    bool have_vars = false;
    std::vector<Poly> current;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = raw.substr(0, raw.find('#'));
        if (!s.empty() && s.back() == '\r') s.pop_back();
        std::size_t b = s.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        std::size_t e = b;
        while (e < s.size() && !std::isspace(static_cast<unsigned char>(s[e]))) ++e;
        const std::string kw = s.substr(b, e - b);
        if (kw == "vars") {
            if (have_vars) throw ParseError(line, static_cast<int>(b) + 1, "duplicate vars line");
            std::size_t p = e;
            while (true) {
                while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
                if (p >= s.size()) break;
                std::size_t q = p;
                while (q < s.size() && !std::isspace(static_cast<unsigned char>(s[q]))) ++q;
                std::string id = s.substr(p, q - p);
                if (!is_ident(id)) throw ParseError(line, static_cast<int>(p) + 1, "bad variable name '" + id + "'");
                if (sys.order.index_of(id) >= 0)
                    throw ParseError(line, static_cast<int>(p) + 1, "variable '" + id + "' declared twice");
                sys.order.names.push_back(id);
                p = q;
            }
            if (sys.order.names.empty()) throw ParseError(line, static_cast<int>(e) + 1, "no variables declared");
            have_vars = true;
        } else if (kw == "poly") {
            if (!have_vars) throw ParseError(line, static_cast<int>(b) + 1, "poly before vars");
            current.push_back(ExprParser(s, e, line, sys.order).parse());
        } else if (kw == "chain") {
            if (s.find_first_not_of(" \t\r", e) != std::string::npos)
                throw ParseError(line, static_cast<int>(e) + 2, "unexpected text after chain");
            if (!current.empty()) sys.chains.push_back(std::move(current));
            current.clear();
        } else {
            throw ParseError(line, static_cast<int>(b) + 1, "expected vars, poly or chain");
        }
    }
    if (!have_vars) throw ParseError(std::max(line, 1), 1, "missing vars line");
    if (!current.empty()) sys.chains.push_back(std::move(current));
    return sys;
}

Poly parse_poly(const std::string& text, const VarOrder& order) {
    return ExprParser(text, 0, 1, order).parse();
}

std::string render_system(const SystemFile& sys) {
    std::ostringstream os;
    os << "vars";
    for (auto& n : sys.order.names) os << " " << n;
    os << "\n";
    for (std::size_t k = 0; k < sys.chains.size(); ++k) {
        if (sys.chains.size() > 1) os << "chain\n";
        for (auto& p : sys.chains[k]) os << "poly " << p.str(sys.order) << "\n";
    }
    return os.str();
}

RegularChain to_chain(const SystemFile& sys, std::size_t k) {
    if (k >= sys.chains.size()) throw std::invalid_argument("no chain " + std::to_string(k + 1) + " in input");
    return {sys.order, sys.chains[k]};
}

std::string render_point(const LimitPoint& p) {
    std::string s = "(";
    for (std::size_t k = 0; k < p.coords.size(); ++k) s += (k ? ", " : "") + coord_str(p, p.coords[k]);
    s += ")";
    if (p.tower.size() == 0) return s;
    s += " where ";
    auto ms = p.tower.str_moduli();
    for (std::size_t j = 0; j < ms.size(); ++j) s += (j ? ", " : "") + ms[j] + " = 0";
    return s;
}

std::string render_results(const std::vector<LimitPoint>& pts0, Format f) {
    std::vector<LimitPoint> pts = pts0;
    std::stable_sort(pts.begin(), pts.end(), [](const LimitPoint& a, const LimitPoint& b) { return a.key() < b.key(); });
    if (f == Format::Text) {
        if (pts.empty()) return "no limit points\n";
        std::string s;
        for (auto& p : pts) s += render_point(p) + "\n";
        return s;
    }
    ordered_json j;
    j["points"] = ordered_json::array();
    for (auto& p : pts) {
        ordered_json e;
        e["tower"] = p.tower.str_moduli();
        std::vector<std::string> cs;
        for (auto& c : p.coords) cs.push_back(coord_str(p, c));
        e["coords"] = cs;
        if (p.tower.size() == 0) e["tuple"] = render_point(p);
        j["points"].push_back(e);
    }
    return j.dump(2) + "\n";
}

std::string render_parametrizations(const std::vector<PuiseuxParam>& pars, Format f) {
    auto series = [](const PuiseuxParam& p) {
        Series s = p.is_exact() ? Series::exact(p.g) : Series::known(p.g, p.accuracy);
        return s.str(p.tower, "T");
    };
    if (f == Format::Text) {
        if (pars.empty()) return "no parametrizations\n";
        std::string out;
        for (auto& p : pars) {
            out += "(T" + (p.sigma != 1 ? "^" + std::to_string(p.sigma) : std::string()) + ", " + series(p) + ")";
            auto ms = p.tower.str_moduli();
            for (std::size_t j = 0; j < ms.size(); ++j) out += (j ? ", " : " where ") + ms[j] + " = 0";
            out += "\n";
        }
        return out;
    }
    ordered_json j;
    j["parametrizations"] = ordered_json::array();
    for (auto& p : pars) {
        ordered_json e;
        e["tower"] = p.tower.str_moduli();
        e["sigma"] = std::to_string(p.sigma);
        std::vector<std::string> g;
        for (auto& c : p.g) g.push_back(p.tower.str(c));
        e["g"] = g;
        e["accuracy"] = p.is_exact() ? std::string("exact") : std::to_string(p.accuracy);
        e["series"] = series(p);
        j["parametrizations"].push_back(e);
    }
    return j.dump(2) + "\n";
}

}  // namespace qcl
