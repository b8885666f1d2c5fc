#ifndef GESOLVE_PROBLEMS_HPP
#define GESOLVE_PROBLEMS_HPP

#include <functional>
#include <string>
#include <vector>

#include "gesolve/cones.hpp"
#include "gesolve/multilinear.hpp"

namespace gesolve {

/// Sparse multivariate polynomial over a fixed variable list. Variables are
/// indexed 0..nvars-1; in a problem context the first m are parameters
/// x1..xm and the rest are unknowns y1..yn.
class Polynomial {
public:
    struct Term {
        double coeff = 0.0;
        std::vector<int> expo;  // length nvars
    };

    explicit Polynomial(int nvars = 0) : nvars_(nvars) {}

    static Polynomial constant(int nvars, double c);
    static Polynomial variable(int nvars, int index);

    int nvars() const { return nvars_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;

    double eval(const Vector& values) const;
    Polynomial derivative(int var) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial pow(int k) const;

    /// Extends the variable list; old variable i becomes new variable map[i].
    Polynomial remap(int new_nvars, const std::vector<int>& map) const;

    std::string to_string(const std::function<std::string(int)>& var_name) const;

    void add_term(double coeff, std::vector<int> expo);

private:
    void normalize();

    int nvars_;
    std::vector<Term> terms_;
};

using Evaluator = std::function<Vector(const Vector& x, const Vector& y)>;

/// A parametric generalized equation: f(x, y) paired with the normal-cone
/// map of an orthant-product cone, a base solution and a degeneracy order.
/// Derivative tensors in y at the base point are precomputed: exactly for
/// polynomial problems, by central differences for opaque evaluators.
struct ProblemSpec {
    int m = 0;  // parameter dimension
    int n = 0;  // unknown dimension
    int p = 2;  // degeneracy order (>= 1; the file grammar requires >= 2)
    ConeSpec cone;
    Vector x0, y0;
    std::vector<Polynomial> f;  // empty for opaque problems
    Evaluator eval_fn;
    std::vector<SymTensor> dtensors;  // orders 1..p at (x0, y0), w.r.t. y

    bool is_polynomial() const { return !f.empty(); }
    Vector eval(const Vector& x, const Vector& y) const;
    /// f_y^{(k)}(x0, y0), 1 <= k <= p.
    const SymTensor& derivative_tensor(int k) const;
};

/// Validates dimensions and the base-point inclusion, computes derivative
/// tensors. Polynomials take precedence over eval_fn when both are given.
ProblemSpec make_problem(int m, int n, int p, ConeSpec cone, Vector x0, Vector y0,
                         std::vector<Polynomial> f, Evaluator eval_fn = nullptr);

/// Same problem with the polynomial structure hidden behind an opaque
/// callback, forcing finite-difference derivative paths.
ProblemSpec make_opaque(const ProblemSpec& spec);

/// Exact derivative tensor of a polynomial system w.r.t. the y-block.
SymTensor poly_derivative_tensor(const std::vector<Polynomial>& f, int m, int n,
                                 const Vector& x0, const Vector& y0, int order);

ProblemSpec parse_problem(const std::string& text);
std::string serialize_problem(const ProblemSpec& spec);

/// Nonlinear program min xi(y) s.t. g(y) <= 0, all data polynomial. The
/// variable list of every polynomial is (x1..xm_params, y1..yn_vars).
struct NlpSpec {
    int m_params = 0;
    int n_vars = 0;
    Polynomial objective;
    std::vector<Polynomial> constraints;
    Vector x0, y0, lambda0;
    int p = 0;  // 0 = infer
};

/// Complementarity reduction: same f, cone = all nonnegative half-lines.
/// p = 0 infers the first order with a nonvanishing derivative tensor.
ProblemSpec from_ncp(std::vector<Polynomial> f, int m, int n, Vector x0, Vector y0,
                     int p = 0);

/// KKT reduction: stacked unknown (y, lambda), rows (dL/dy, -g), cone
/// F^n x P^m.
ProblemSpec from_kkt(const NlpSpec& nlp);

NlpSpec parse_nlp(const std::string& text);

/// Built-in fixtures: "example1", "example2", "example3".
ProblemSpec builtin_problem(const std::string& name);

/// Accepts a path or "builtin:<name>".
ProblemSpec load_problem(const std::string& path_or_builtin);

/// First k in 1..4 whose derivative tensor at the base is nonzero.
int infer_order(const std::vector<Polynomial>& f, int m, int n, const Vector& x0,
                const Vector& y0, double tol = 1e-10);

}  // namespace gesolve

#endif
