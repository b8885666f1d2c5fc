#include "gesolve/problems.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

namespace gesolve {

namespace {

std::string fmt_coeff(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

// ---------------------------------------------------------------------------
// Polynomial

Polynomial Polynomial::constant(int nvars, double c) {
    Polynomial p(nvars);
    if (c != 0.0) p.terms_.push_back({c, std::vector<int>(nvars, 0)});
    return p;
}

Polynomial Polynomial::variable(int nvars, int index) {
    Polynomial p(nvars);
    std::vector<int> e(nvars, 0);
    e[index] = 1;
    p.terms_.push_back({1.0, std::move(e)});
    return p;
}

int Polynomial::degree() const {
    int d = 0;
    for (const Term& t : terms_) {
        int s = 0;
        for (int e : t.expo) s += e;
        d = std::max(d, s);
    }
    return d;
}

double Polynomial::eval(const Vector& values) const {
    if (values.size() != nvars_) throw DimensionError("Polynomial::eval: dimension mismatch");
    double sum = 0.0;
    for (const Term& t : terms_) {
        double v = t.coeff;
        for (int i = 0; i < nvars_; ++i)
            for (int k = 0; k < t.expo[i]; ++k) v *= values[i];
        sum += v;
    }
    return sum;
}

Polynomial Polynomial::derivative(int var) const {
    Polynomial out(nvars_);
    for (const Term& t : terms_) {
        if (t.expo[var] == 0) continue;
        Term d = t;
        d.coeff *= t.expo[var];
        d.expo[var] -= 1;
        out.terms_.push_back(std::move(d));
    }
    out.normalize();
    return out;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw DimensionError("polynomial arity mismatch");
    Polynomial out(nvars_);
    out.terms_ = terms_;
    out.terms_.insert(out.terms_.end(), o.terms_.begin(), o.terms_.end());
    out.normalize();
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (Term& t : out.terms_) t.coeff = -t.coeff;
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw DimensionError("polynomial arity mismatch");
    Polynomial out(nvars_);
    for (const Term& a : terms_)
        for (const Term& b : o.terms_) {
            Term t;
            t.coeff = a.coeff * b.coeff;
            t.expo.resize(nvars_);
            for (int i = 0; i < nvars_; ++i) t.expo[i] = a.expo[i] + b.expo[i];
            out.terms_.push_back(std::move(t));
        }
    out.normalize();
    return out;
}

Polynomial Polynomial::pow(int k) const {
    if (k < 0) throw DimensionError("polynomial exponent must be nonnegative");
    Polynomial out = Polynomial::constant(nvars_, 1.0);
    for (int i = 0; i < k; ++i) out = out * (*this);
    return out;
}

Polynomial Polynomial::remap(int new_nvars, const std::vector<int>& map) const {
    Polynomial out(new_nvars);
    for (const Term& t : terms_) {
        Term r;
        r.coeff = t.coeff;
        r.expo.assign(new_nvars, 0);
        for (int i = 0; i < nvars_; ++i) r.expo[map[i]] = t.expo[i];
        out.terms_.push_back(std::move(r));
    }
    out.normalize();
    return out;
}

void Polynomial::add_term(double coeff, std::vector<int> expo) {
    if (static_cast<int>(expo.size()) != nvars_)
        throw DimensionError("polynomial term arity mismatch");
    terms_.push_back({coeff, std::move(expo)});
    normalize();
}

void Polynomial::normalize() {
    std::map<std::vector<int>, double> acc;
    for (const Term& t : terms_) acc[t.expo] += t.coeff;
    terms_.clear();
    for (auto& [expo, coeff] : acc)
        if (coeff != 0.0) terms_.push_back({coeff, expo});
    // graded lexicographic, highest degree first: canonical print order
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
        int da = 0, db = 0;
        for (int e : a.expo) da += e;
        for (int e : b.expo) db += e;
        if (da != db) return da > db;
        return a.expo > b.expo;
    });
}

std::string Polynomial::to_string(const std::function<std::string(int)>& var_name) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
        const Term& t = terms_[k];
        double c = t.coeff;
        if (k == 0) {
            if (c < 0) {
                s += "-";
                c = -c;
            }
        } else {
            s += (c < 0) ? " - " : " + ";
            c = std::abs(c);
        }
        bool has_var = false;
        std::string vars;
        for (int i = 0; i < nvars_; ++i) {
            if (t.expo[i] == 0) continue;
            if (has_var) vars += "*";
            vars += var_name(i);
            if (t.expo[i] > 1) vars += "^" + std::to_string(t.expo[i]);
            has_var = true;
        }
        if (!has_var) {
            s += fmt_coeff(c);
        } else if (c == 1.0) {
            s += vars;
        } else {
            s += fmt_coeff(c) + "*" + vars;
        }
    }
    return s;
}

// ---------------------------------------------------------------------------
// Expression parsing

namespace {

struct ExprParser {
    const std::string& text;
    int line;
    std::size_t pos = 0;
    int m, n;  // x-arity, y-arity

    ExprParser(const std::string& t, int line_, int m_, int n_)
        : text(t), line(line_), m(m_), n(n_) {}

    [[noreturn]] void fail(const std::string& what, std::size_t at) const {
        throw ParseError(what, line, static_cast<int>(at) + 1);
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool peek(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }

    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos;
        return true;
    }

    Polynomial parse() {
        Polynomial e = expression();
        skip_ws();
        if (pos != text.size()) fail("unexpected trailing input", pos);
        return e;
    }

    Polynomial expression() {
        skip_ws();
        bool neg = false;
        while (accept('-')) neg = !neg;
        accept('+');
        Polynomial acc = term();
        if (neg) acc = -acc;
        for (;;) {
            skip_ws();
            if (accept('+'))
                acc = acc + term();
            else if (accept('-'))
                acc = acc - term();
            else
                break;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (accept('*')) acc = acc * factor();
        return acc;
    }

    Polynomial factor() {
        skip_ws();
        bool neg = false;
        while (accept('-')) neg = !neg;
        Polynomial base = primary();
        if (accept('^')) {
            skip_ws();
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (start == pos) fail("expected integer exponent after '^'", pos);
            base = base.pow(std::stoi(text.substr(start, pos - start)));
        }
        return neg ? -base : base;
    }

    Polynomial primary() {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of expression", pos);
        char c = text[pos];
        if (c == '(') {
            ++pos;
            Polynomial e = expression();
            if (!accept(')')) fail("expected ')'", pos);
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            std::size_t start = pos;
            const char* begin = text.c_str() + pos;
            char* end = nullptr;
            double v = std::strtod(begin, &end);
            if (end == begin) fail("expected number", start);
            pos += static_cast<std::size_t>(end - begin);
            return Polynomial::constant(m + n, v);
        }
        if (c == 'x' || c == 'y') {
            std::size_t start = pos;
            ++pos;
            std::size_t dstart = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (dstart == pos) fail("expected variable index", pos);
            int idx = std::stoi(text.substr(dstart, pos - dstart));
            if (c == 'x') {
                if (idx < 1 || idx > m) fail("parameter index out of range", start);
                return Polynomial::variable(m + n, idx - 1);
            }
            if (idx < 1 || idx > n) fail("variable index out of range", start);
            return Polynomial::variable(m + n, m + idx - 1);
        }
        fail(std::string("unexpected character '") + c + "'", pos);
    }
};

std::vector<double> parse_reals(std::istringstream& in, int count, int line, const char* what) {
    std::vector<double> vals;
    for (int i = 0; i < count; ++i) {
        double v;
        if (!(in >> v))
            throw ParseError(std::string("expected ") + std::to_string(count) + " reals for " + what,
                             line, 0);
        vals.push_back(v);
    }
    return vals;
}

std::string strip_comment(const std::string& line) {
    auto hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
}

bool blank(const std::string& s) {
    return std::all_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isspace(c); });
}

}  // namespace

// ---------------------------------------------------------------------------
// ProblemSpec

Vector ProblemSpec::eval(const Vector& x, const Vector& y) const {
    if (x.size() != m || y.size() != n) throw DimensionError("ProblemSpec::eval: dimension mismatch");
    if (is_polynomial()) {
        Vector vals(m + n);
        vals.head(m) = x;
        vals.tail(n) = y;
        Vector out(n);
        for (int i = 0; i < n; ++i) out[i] = f[i].eval(vals);
        return out;
    }
    Vector out;
    try {
        out = eval_fn(x, y);
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        throw EvalError(std::string("evaluator failed: ") + e.what());
    }
    if (out.size() != n) throw EvalError("evaluator returned wrong dimension");
    if (!out.allFinite()) throw EvalError("evaluator produced non-finite values");
    return out;
}

const SymTensor& ProblemSpec::derivative_tensor(int k) const {
    if (k < 1 || k > static_cast<int>(dtensors.size()))
        throw DimensionError("derivative_tensor: order out of range");
    return dtensors[k - 1];
}

SymTensor poly_derivative_tensor(const std::vector<Polynomial>& f, int m, int n,
                                 const Vector& x0, const Vector& y0, int order) {
    if (order < 1) throw DimensionError("poly_derivative_tensor: order must be >= 1");
    Vector vals(m + n);
    vals.head(m) = x0;
    vals.tail(n) = y0;

    SymTensor T(order, static_cast<int>(f.size()), n);
    for (int i = 0; i < static_cast<int>(f.size()); ++i) {
        // cache per sorted multi-index, then mirror over permutations
        std::vector<int> idx(order, 0);
        do {
            if (!std::is_sorted(idx.begin(), idx.end())) continue;
            Polynomial d = f[i];
            for (int k = 0; k < order; ++k) d = d.derivative(m + idx[k]);
            T.set_symmetric(i, idx, d.eval(vals));
        } while (detail::next_multi_index(idx, n));
    }
    return T;
}

ProblemSpec make_problem(int m, int n, int p, ConeSpec cone, Vector x0, Vector y0,
                         std::vector<Polynomial> f, Evaluator eval_fn) {
    if (n <= 0 || m < 0) throw DimensionError("make_problem: bad dimensions");
    if (cone.dim() != n) throw DimensionError("make_problem: cone dimension mismatch");
    if (x0.size() != m || y0.size() != n) throw DimensionError("make_problem: base point dimensions");
    if (!x0.allFinite() || !y0.allFinite()) throw DimensionError("make_problem: non-finite base point");
    if (p < 1) throw DimensionError("make_problem: order must be >= 1");
    if (!f.empty() && static_cast<int>(f.size()) != n)
        throw DimensionError("make_problem: need one component per unknown");
    if (f.empty() && !eval_fn) throw DimensionError("make_problem: no evaluator");

    ProblemSpec spec;
    spec.m = m;
    spec.n = n;
    spec.p = p;
    spec.cone = std::move(cone);
    spec.x0 = std::move(x0);
    spec.y0 = std::move(y0);
    spec.f = std::move(f);
    spec.eval_fn = std::move(eval_fn);

    Vector f0 = spec.eval(spec.x0, spec.y0);
    double resid = inclusion_residual(spec.cone, spec.y0, f0);
    if (!(resid <= 1e-9))
        throw InvalidBasePoint("base point violates the solution inclusion (residual " +
                               std::to_string(resid) + ")");

    if (spec.is_polynomial()) {
        for (int k = 1; k <= p; ++k)
            spec.dtensors.push_back(poly_derivative_tensor(spec.f, m, n, spec.x0, spec.y0, k));
    } else {
        if (p > 4) throw DimensionError("make_problem: FD derivatives limited to order 4");
        auto ef = [&spec](const Vector& y) { return spec.eval(spec.x0, y); };
        for (int k = 1; k <= p; ++k)
            spec.dtensors.push_back(
                fd_derivative_tensor(ef, spec.y0, k, fd_default_step(k, spec.y0)));
    }
    return spec;
}

ProblemSpec make_opaque(const ProblemSpec& spec) {
    ProblemSpec captured = spec;
    Evaluator fn = [captured](const Vector& x, const Vector& y) { return captured.eval(x, y); };
    return make_problem(spec.m, spec.n, spec.p, spec.cone, spec.x0, spec.y0, {}, std::move(fn));
}

// ---------------------------------------------------------------------------
// Problem files

ProblemSpec parse_problem(const std::string& text) {
    std::istringstream stream(text);
    std::string raw;
    int line_no = 0;

    int m = -1, n = -1, p = -1;
    ConeSpec cone;
    bool have_cone = false;
    Vector x0, y0;
    bool have_base = false;
    std::map<int, Polynomial> rows;

    while (std::getline(stream, raw)) {
        ++line_no;
        std::string line = strip_comment(raw);
        if (blank(line)) continue;
        std::istringstream in(line);
        std::string key;
        in >> key;

        if (key == "dims") {
            if (!(in >> m >> n) || n <= 0 || m < 0)
                throw ParseError("dims expects: dims <m> <n>", line_no, 0);
        } else if (key == "cone") {
            if (m < 0) throw ParseError("cone before dims", line_no, 0);
            std::string s;
            in >> s;
            cone = ConeSpec::from_string(s);
            if (cone.dim() != n) throw ParseError("cone length must equal n", line_no, 0);
            have_cone = true;
        } else if (key == "order") {
            if (!(in >> p)) throw ParseError("order expects an integer", line_no, 0);
            if (p < 2) throw ParseError("order must be >= 2", line_no, 0);
        } else if (key == "base") {
            if (m < 0) throw ParseError("base before dims", line_no, 0);
            std::string tag;
            in >> tag;
            if (tag != "x") throw ParseError("base expects: base x <m reals> y <n reals>", line_no, 0);
            auto xs = parse_reals(in, m, line_no, "x");
            in >> tag;
            if (tag != "y") throw ParseError("base expects: base x <m reals> y <n reals>", line_no, 0);
            auto ys = parse_reals(in, n, line_no, "y");
            x0 = Eigen::Map<Vector>(xs.data(), m);
            y0 = Eigen::Map<Vector>(ys.data(), n);
            have_base = true;
        } else if (key.size() > 1 && key[0] == 'f') {
            if (m < 0) throw ParseError("component before dims", line_no, 0);
            int idx = 0;
            try {
                idx = std::stoi(key.substr(1));
            } catch (...) {
                throw ParseError("bad component name '" + key + "'", line_no, 0);
            }
            if (idx < 1 || idx > n) throw ParseError("component index out of range", line_no, 0);
            std::string rest;
            std::getline(in, rest);
            auto eq = rest.find('=');
            if (eq == std::string::npos) throw ParseError("expected '=' after component name", line_no, 0);
            ExprParser ep(rest.substr(eq + 1), line_no, m, n);
            // column offsets inside the '=' remainder are good enough for messages
            rows.emplace(idx, ep.parse());
        } else {
            throw ParseError("unknown directive '" + key + "'", line_no, 0);
        }
    }

    if (m < 0) throw ParseError("missing dims line", line_no, 0);
    if (!have_cone) throw ParseError("missing cone line", line_no, 0);
    if (p < 0) throw ParseError("missing order line", line_no, 0);
    if (!have_base) {
        x0 = Vector::Zero(m);
        y0 = Vector::Zero(n);
    }
    std::vector<Polynomial> f;
    for (int i = 1; i <= n; ++i) {
        auto it = rows.find(i);
        if (it == rows.end())
            throw ParseError("missing component f" + std::to_string(i), line_no, 0);
        f.push_back(it->second);
    }
    return make_problem(m, n, p, std::move(cone), std::move(x0), std::move(y0), std::move(f));
}

std::string serialize_problem(const ProblemSpec& spec) {
    if (!spec.is_polynomial())
        throw DimensionError("serialize_problem: opaque problems have no file form");
    std::ostringstream out;
    out << "dims " << spec.m << " " << spec.n << "\n";
    out << "cone " << spec.cone.to_string() << "\n";
    out << "order " << spec.p << "\n";
    out << "base x";
    for (int i = 0; i < spec.m; ++i) out << " " << fmt_coeff(spec.x0[i]);
    out << " y";
    for (int i = 0; i < spec.n; ++i) out << " " << fmt_coeff(spec.y0[i]);
    out << "\n";
    auto name = [&spec](int i) {
        return i < spec.m ? "x" + std::to_string(i + 1) : "y" + std::to_string(i - spec.m + 1);
    };
    for (int i = 0; i < spec.n; ++i)
        out << "f" << (i + 1) << " = " << spec.f[i].to_string(name) << "\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// Reductions

int infer_order(const std::vector<Polynomial>& f, int m, int n, const Vector& x0,
                const Vector& y0, double tol) {
    for (int k = 1; k <= 4; ++k) {
        if (poly_derivative_tensor(f, m, n, x0, y0, k).max_abs() > tol) return k;
    }
    throw OrderTooLowError("all derivative tensors up to order 4 vanish at the base point");
}

ProblemSpec from_ncp(std::vector<Polynomial> f, int m, int n, Vector x0, Vector y0, int p) {
    if (p == 0) p = infer_order(f, m, n, x0, y0);
    return make_problem(m, n, p, ConeSpec::all_nonneg(n), std::move(x0), std::move(y0),
                        std::move(f));
}

ProblemSpec from_kkt(const NlpSpec& nlp) {
    const int mp = nlp.m_params;
    const int ny = nlp.n_vars;
    const int mc = static_cast<int>(nlp.constraints.size());
    const int total = mp + ny + mc;

    std::vector<int> map(mp + ny);
    for (int i = 0; i < mp + ny; ++i) map[i] = i;

    Polynomial obj = nlp.objective.remap(total, map);
    std::vector<Polynomial> g;
    for (const Polynomial& gi : nlp.constraints) g.push_back(gi.remap(total, map));

    std::vector<Polynomial> rows;
    for (int j = 0; j < ny; ++j) {
        Polynomial dj = obj.derivative(mp + j);
        for (int i = 0; i < mc; ++i)
            dj = dj + Polynomial::variable(total, mp + ny + i) * g[i].derivative(mp + j);
        rows.push_back(std::move(dj));
    }
    for (int i = 0; i < mc; ++i) rows.push_back(-g[i]);

    std::vector<CoordKind> kinds(ny, CoordKind::Free);
    kinds.insert(kinds.end(), mc, CoordKind::NonNeg);

    Vector x0 = nlp.x0.size() == mp ? nlp.x0 : Vector::Zero(mp);
    Vector base(ny + mc);
    base.head(ny) = nlp.y0.size() == ny ? nlp.y0 : Vector::Zero(ny);
    base.tail(mc) = nlp.lambda0.size() == mc ? nlp.lambda0 : Vector::Zero(mc);

    int p = nlp.p > 0 ? nlp.p : infer_order(rows, mp, ny + mc, x0, base);
    return make_problem(mp, ny + mc, p, ConeSpec(std::move(kinds)), std::move(x0),
                        std::move(base), std::move(rows));
}

NlpSpec parse_nlp(const std::string& text) {
    std::istringstream stream(text);
    std::string raw;
    int line_no = 0;

    NlpSpec nlp;
    bool have_dims = false, have_obj = false;

    while (std::getline(stream, raw)) {
        ++line_no;
        std::string line = strip_comment(raw);
        if (blank(line)) continue;
        std::istringstream in(line);
        std::string key;
        in >> key;

        if (key == "dims") {
            if (!(in >> nlp.m_params >> nlp.n_vars) || nlp.n_vars <= 0 || nlp.m_params < 0)
                throw ParseError("dims expects: dims <m> <n>", line_no, 0);
            have_dims = true;
        } else if (key == "minimize") {
            if (!have_dims) throw ParseError("minimize before dims", line_no, 0);
            std::string rest;
            std::getline(in, rest);
            ExprParser ep(rest, line_no, nlp.m_params, nlp.n_vars);
            nlp.objective = ep.parse();
            have_obj = true;
        } else if (key == "constraint") {
            if (!have_dims) throw ParseError("constraint before dims", line_no, 0);
            std::string rest;
            std::getline(in, rest);
            ExprParser ep(rest, line_no, nlp.m_params, nlp.n_vars);
            nlp.constraints.push_back(ep.parse());
        } else if (key == "order") {
            if (!(in >> nlp.p) || nlp.p < 2)
                throw ParseError("order must be an integer >= 2", line_no, 0);
        } else if (key == "base") {
            std::string tag;
            in >> tag;
            if (tag != "x") throw ParseError("base expects: base x .. y .. lambda ..", line_no, 0);
            auto xs = parse_reals(in, nlp.m_params, line_no, "x");
            in >> tag;
            if (tag != "y") throw ParseError("base expects: base x .. y .. lambda ..", line_no, 0);
            auto ys = parse_reals(in, nlp.n_vars, line_no, "y");
            nlp.x0 = Eigen::Map<Vector>(xs.data(), nlp.m_params);
            nlp.y0 = Eigen::Map<Vector>(ys.data(), nlp.n_vars);
            if (in >> tag) {
                if (tag != "lambda") throw ParseError("expected 'lambda'", line_no, 0);
                std::vector<double> ls;
                double v;
                while (in >> v) ls.push_back(v);
                nlp.lambda0 = Eigen::Map<Vector>(ls.data(), static_cast<int>(ls.size()));
            }
        } else {
            throw ParseError("unknown directive '" + key + "'", line_no, 0);
        }
    }
    if (!have_dims) throw ParseError("missing dims line", line_no, 0);
    if (!have_obj) throw ParseError("missing minimize line", line_no, 0);
    if (nlp.constraints.empty()) throw ParseError("need at least one constraint", line_no, 0);
    return nlp;
}

// ---------------------------------------------------------------------------
// Built-in fixtures

namespace {

Polynomial mono(int nvars, double coeff, std::initializer_list<std::pair<int, int>> powers) {
    std::vector<int> e(nvars, 0);
    for (auto [var, pw] : powers) e[var] = pw;
    Polynomial p(nvars);
    p.add_term(coeff, std::move(e));
    return p;
}

}  // namespace

ProblemSpec builtin_problem(const std::string& name) {
    if (name == "example1") {
        // complementarity pair: f1 = y1^2 - y2^2 - x1, f2 = y1*y2 - x2 on R^2_+
        const int nv = 4;  // x1 x2 y1 y2
        Polynomial f1 = mono(nv, 1, {{2, 2}}) - mono(nv, 1, {{3, 2}}) - mono(nv, 1, {{0, 1}});
        Polynomial f2 = mono(nv, 1, {{2, 1}, {3, 1}}) - mono(nv, 1, {{1, 1}});
        return make_problem(2, 2, 2, ConeSpec::from_string("PP"), Vector::Zero(2),
                            Vector::Zero(2), {f1, f2});
    }
    if (name == "example2") {
        // degenerate KKT system, unknowns (y1, y2, l1, l2), one parameter
        const int nv = 5;  // x y1 y2 l1 l2
        const int X = 0, Y1 = 1, Y2 = 2, L1 = 3, L2 = 4;
        Polynomial F1 = mono(nv, 4, {{Y1, 3}}) - mono(nv, 1, {{X, 1}}) +
                        mono(nv, 3, {{L1, 1}, {Y1, 2}}) + mono(nv, 3, {{L2, 1}, {Y1, 2}});
        Polynomial F2 = mono(nv, -4, {{Y2, 3}}) - mono(nv, 6, {{L1, 1}, {Y2, 2}}) +
                        mono(nv, 6, {{L2, 1}, {Y2, 2}});
        Polynomial F3 = mono(nv, 1, {{Y1, 3}}) - mono(nv, 2, {{Y2, 3}});
        Polynomial F4 = mono(nv, 1, {{Y1, 3}}) + mono(nv, 2, {{Y2, 3}});
        return make_problem(1, 4, 3, ConeSpec::from_string("FFPP"), Vector::Zero(1),
                            Vector::Zero(4), {F1, F2, F3, F4});
    }
    if (name == "example3") {
        // unparameterized tangent-cone fixture: f = (y2^2 - y1^2, y1*y2) on R^2_+
        const int nv = 2;
        Polynomial f1 = mono(nv, 1, {{1, 2}}) - mono(nv, 1, {{0, 2}});
        Polynomial f2 = mono(nv, 1, {{0, 1}, {1, 1}});
        return make_problem(0, 2, 2, ConeSpec::from_string("PP"), Vector(0), Vector::Zero(2),
                            {f1, f2});
    }
    throw DimensionError("unknown builtin problem '" + name + "'");
}

ProblemSpec load_problem(const std::string& path_or_builtin) {
    if (path_or_builtin.rfind("builtin:", 0) == 0)
        return builtin_problem(path_or_builtin.substr(8));
    std::ifstream in(path_or_builtin);
    if (!in) throw Error("cannot open problem file '" + path_or_builtin + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_problem(buf.str());
}

}  // namespace gesolve
