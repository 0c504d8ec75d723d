#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "padlab/vector.hpp"

namespace padlab {

/// Parsed problem file: a context header plus named vector and set bindings.
///
/// Line grammar:
///   ctx p=<int> N=<int> n=<int>
///   vec <name> = <i1>,<i2>,...,<in>      (any sign/size, reduced mod p^N)
///   set <name> = {<vecname>,...}
///   # comment / blank lines ignored
struct ProblemFile {
    Context ctx;
    std::vector<std::pair<std::string, Vector>> vectors;          // in file order
    std::vector<std::pair<std::string, std::vector<std::string>>> sets;

    const Vector& vec(const std::string& name) const {
        for (const auto& [n, v] : vectors)
            if (n == name) return v;
        throw precondition_violated("no vector named '" + name + "'");
    }
    std::vector<Vector> set(const std::string& name) const {
        for (const auto& [n, members] : sets)
            if (n == name) {
                std::vector<Vector> out;
                out.reserve(members.size());
                for (const auto& m : members) out.push_back(vec(m));
                return out;
            }
        throw precondition_violated("no set named '" + name + "'");
    }
};

namespace detail {

inline std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

inline int64_t parse_reduced_integer(const std::string& tok, const Context& ctx, int line) {
    if (tok.empty()) throw parse_error(line, "empty integer");
    size_t i = tok[0] == '-' || tok[0] == '+' ? 1 : 0;
    if (i == tok.size() || tok.find_first_not_of("0123456789", i) != std::string::npos)
        throw parse_error(line, "bad integer '" + tok + "'");
    // arbitrary size: reduce through an exact integer
    mpz_class z(tok);
    mpz_class m(ctx.modulus());
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), m.get_mpz_t());
    return r.get_si();
}

}  // namespace detail

inline ProblemFile parse_problem(const std::string& text) {
    std::optional<Context> ctx;
    std::vector<std::pair<std::string, Vector>> vectors;
    std::vector<std::pair<std::string, std::vector<std::string>>> sets;
    auto defined = [&](const std::string& name) {
        for (const auto& [n, v] : vectors)
            if (n == name) return true;
        for (const auto& [n, v] : sets)
            if (n == name) return true;
        return false;
    };

    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = detail::trim(raw);
        if (const auto h = s.find('#'); h != std::string::npos) s = detail::trim(s.substr(0, h));
        if (s.empty()) continue;
        std::istringstream ls(s);
        std::string kind;
        ls >> kind;
        if (kind == "ctx") {
            if (ctx) throw parse_error(line, "duplicate ctx line");
            std::map<std::string, int64_t> kv;
            std::string tok;
            while (ls >> tok) {
                const auto eq = tok.find('=');
                if (eq == std::string::npos) throw parse_error(line, "expected key=value, got '" + tok + "'");
                const std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
                if (val.empty() || val.find_first_not_of("0123456789") != std::string::npos)
                    throw parse_error(line, "bad value in '" + tok + "'");
                kv[key] = std::stoll(val);
            }
            if (!kv.count("p") || !kv.count("N") || !kv.count("n"))
                throw parse_error(line, "ctx line needs p=, N= and n=");
            ctx.emplace(kv["p"], static_cast<int>(kv["N"]), static_cast<int>(kv["n"]));
        } else if (kind == "vec") {
            if (!ctx) throw parse_error(line, "vec before ctx");
            std::string name, eq;
            ls >> name >> eq;
            if (name.empty() || eq != "=") throw parse_error(line, "expected: vec <name> = <coords>");
            if (defined(name)) throw parse_error(line, "duplicate name '" + name + "'");
            std::string rest;
            std::getline(ls, rest);
            std::vector<int64_t> coords;
            std::istringstream cs(detail::trim(rest));
            std::string tok;
            while (std::getline(cs, tok, ',')) coords.push_back(detail::parse_reduced_integer(detail::trim(tok), *ctx, line));
            if (static_cast<int>(coords.size()) != ctx->dim())
                throw dimension_mismatch("line " + std::to_string(line) + ": vector '" + name + "' has " +
                                         std::to_string(coords.size()) + " coordinates, context wants " +
                                         std::to_string(ctx->dim()));
            vectors.emplace_back(name, Vector(*ctx, coords));
        } else if (kind == "set") {
            if (!ctx) throw parse_error(line, "set before ctx");
            std::string name, eq;
            ls >> name >> eq;
            if (name.empty() || eq != "=") throw parse_error(line, "expected: set <name> = {..}");
            if (defined(name)) throw parse_error(line, "duplicate name '" + name + "'");
            std::string rest;
            std::getline(ls, rest);
            rest = detail::trim(rest);
            if (rest.size() < 2 || rest.front() != '{' || rest.back() != '}')
                throw parse_error(line, "set body must be {name,...}");
            std::vector<std::string> members;
            std::istringstream ms(rest.substr(1, rest.size() - 2));
            std::string tok;
            while (std::getline(ms, tok, ',')) {
                tok = detail::trim(tok);
                if (tok.empty()) continue;
                bool found = false;
                for (const auto& [n, v] : vectors) found = found || n == tok;
                if (!found) throw parse_error(line, "set member '" + tok + "' not defined");
                members.push_back(tok);
            }
            sets.emplace_back(name, std::move(members));
        } else {
            throw parse_error(line, "unknown directive '" + kind + "'");
        }
    }
    if (!ctx) throw parse_error(line ? line : 1, "missing ctx line");
    return ProblemFile{*ctx, std::move(vectors), std::move(sets)};
}

/// Canonical textual form; parse(render(parse(t))) == parse(t).
inline std::string render_problem(const ProblemFile& p) {
    std::string out = "ctx p=" + std::to_string(p.ctx.p()) + " N=" + std::to_string(p.ctx.precision()) +
                      " n=" + std::to_string(p.ctx.dim()) + "\n";
    for (const auto& [name, v] : p.vectors) out += "vec " + name + " = " + v.str() + "\n";
    for (const auto& [name, members] : p.sets) {
        out += "set " + name + " = {";
        for (size_t i = 0; i < members.size(); ++i) {
            if (i) out += ",";
            out += members[i];
        }
        out += "}\n";
    }
    return out;
}

}  // namespace padlab
