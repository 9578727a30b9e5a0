#pragma once

#include <memory>

#include "calab/harness.hpp"

namespace calab {

struct ParseError : std::runtime_error {
    int line, col;
    ParseError(const std::string& msg, int line, int col)
        : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(col) + ": " +
                             msg),
          line(line),
          col(col) {}
};

namespace ast {

struct IdealLit {
    std::vector<std::string> gens;  // raw polynomial texts
    bool operator==(const IdealLit&) const = default;
};

struct ModuleExpr;
using ModuleExprPtr = std::shared_ptr<ModuleExpr>;

struct ModuleExpr {
    enum class Kind {
        name,
        quotient,      // quotient(Ring, (f, ...))
        ideal_module,  // ideal_module(Ring, (f, ...))
        free_mod,      // free(Ring, rank)
        transpose,
        dual,
        minimal,
        tensor,
        dsum,
        syzygy,  // syzygy(M, r)
        tor,     // tor(i, M, N)
        ext      // ext(i, M, N)
    };
    Kind kind = Kind::name;
    std::string name;  // module name or ring name
    IdealLit ideal;
    long number = 0;
    ModuleExprPtr a, b;
};

/// Generic call argument; the prop handlers coerce by position.
struct Arg {
    enum class Kind { module_expr, ideal_lit, name_list, number, raw };
    Kind kind = Kind::raw;
    ModuleExprPtr module;
    IdealLit ideal;
    std::vector<std::string> list;
    long number = 0;
    std::string raw;  // bare name or polynomial text
    int line = 0, col = 0;
};

struct ScalarExpr {
    enum class Kind { literal, infinity, let_name, call };
    Kind kind = Kind::literal;
    long literal = 0;
    std::string name;       // let binding or call name
    std::vector<Arg> args;  // call arguments
};

struct Stmt {
    enum class Kind { ring_def, ideal_def, prime_def, module_def, let_def, check, assert_stmt };
    Kind kind;
    int line = 1, col = 1;

    // ring_def
    std::string name;
    std::string field;  // "Q" or "Fp"
    long fp_modulus = 0;
    std::vector<std::string> variables;
    IdealLit defining;  // empty = polynomial ring

    // ideal_def / prime_def reuse name + defining
    // module_def
    ModuleExprPtr module;

    // let_def
    ScalarExpr scalar;

    // check
    std::string label;
    std::string prop;
    std::vector<Arg> args;
    CheckVerdict expect = CheckVerdict::verified;

    // assert
    ScalarExpr lhs, rhs;
    std::string relop;
};

struct Session {
    std::vector<Stmt> stmts;
};

}  // namespace ast

ast::Session parse_session(const std::string& text);
std::string print_session(const ast::Session& s);

/// Execute the statements in order; check/assert statements append entries.
/// Assertion failures mark the entry refuted and continue.
std::vector<CheckReport> evaluate_session(const ast::Session& s);

/// Convenience: parse + evaluate.
std::vector<CheckReport> run_session_text(const std::string& text);

/// Evaluate the session's definitions, then one scalar invariant expression
/// (e.g. "depth((y,z,w), M)") against them; returns its printed value.
std::string evaluate_scalar_in_session(const std::string& session_text,
                                       const std::string& scalar_expr_text);

}  // namespace calab
