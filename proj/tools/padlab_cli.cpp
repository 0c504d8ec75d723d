// padlab command line: queries against problem files plus the property lab.
//
// Exit codes: 0 success, 1 usage, 2 parse error, 3 computation error,
// 4 suite failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "padlab/padlab.hpp"

namespace {

int usage() {
    std::cerr <<
        "usage: padlab <command> [args]\n"
        "\n"
        "  closure  <file> <set>                      echelon generators of the pure closure\n"
        "  dist     <file> <vec> <set>                distance to the pure closure (p^-<k> or 0)\n"
        "  type     <file> <vec> <set>                radius and anchor of the Galois type\n"
        "  indep    <file> <vec> <setA> <setB>        'independent' or 'forks'\n"
        "  rank     <file> <vec> <setA>               rank of the element over the set\n"
        "  epsindep <file> <vec> <setA> <setB> <eps>  eps-independence (eps: p^-<k>, 1 or 0)\n"
        "  geom     <file> <setA> <rep> <vec>...      class partition and dimension\n"
        "  verify   [--suite <name>] [--seed <int>] [--instances <int>]\n"
        "\n"
        "problem file grammar:\n"
        "  ctx p=<int> N=<int> n=<int>\n"
        "  vec <name> = <i1>,<i2>,...,<in>\n"
        "  set <name> = {<vecname>,...}\n"
        "  # comment\n";
    return 1;
}

padlab::ProblemFile load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw padlab::parse_error(0, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return padlab::parse_problem(ss.str());
}

int cmd_closure(const std::vector<std::string>& args) {
    if (args.size() != 2) return usage();
    auto pf = load(args[0]);
    auto t = padlab::pure_closure(pf.ctx, pf.set(args[1]));
    for (const auto& g : t.generators()) std::cout << g.str() << "\n";
    return 0;
}

int cmd_dist(const std::vector<std::string>& args) {
    if (args.size() != 3) return usage();
    auto pf = load(args[0]);
    auto t = padlab::pure_closure(pf.ctx, pf.set(args[2]));
    std::cout << t.dist_to(pf.vec(args[1])).str() << "\n";
    return 0;
}

int cmd_type(const std::vector<std::string>& args) {
    if (args.size() != 3) return usage();
    auto pf = load(args[0]);
    auto q = padlab::galois_type(pf.vec(args[1]), pf.set(args[2]));
    std::cout << "radius " << q.radius.str() << "\n";
    std::cout << "anchor " << q.anchor.str() << "\n";
    return 0;
}

int cmd_indep(const std::vector<std::string>& args) {
    if (args.size() != 4) return usage();
    auto pf = load(args[0]);
    const bool ind = padlab::independent(pf.vec(args[1]), pf.set(args[2]), pf.set(args[3]));
    std::cout << (ind ? "independent" : "forks") << "\n";
    return 0;
}

int cmd_rank(const std::vector<std::string>& args) {
    if (args.size() != 3) return usage();
    auto pf = load(args[0]);
    std::cout << padlab::rank(pf.vec(args[1]), pf.set(args[2])).str() << "\n";
    return 0;
}

int cmd_epsindep(const std::vector<std::string>& args) {
    if (args.size() != 5) return usage();
    auto pf = load(args[0]);
    const auto eps = padlab::Distance::parse(args[4]);
    const bool ok = padlab::eps_independent(pf.vec(args[1]), pf.set(args[2]), pf.set(args[3]), eps);
    std::cout << (ok ? "true" : "false") << "\n";
    return 0;
}

int cmd_geom(const std::vector<std::string>& args) {
    if (args.size() < 3) return usage();
    auto pf = load(args[0]);
    padlab::GeometrySpace g(pf.ctx, pf.set(args[1]), pf.vec(args[2]));
    std::vector<std::string> names(args.begin() + 3, args.end());
    std::vector<padlab::Vector> elems;
    for (const auto& n : names) elems.push_back(pf.vec(n));
    std::vector<std::vector<size_t>> classes;
    for (size_t i = 0; i < elems.size(); ++i) {
        bool placed = false;
        for (auto& cls : classes)
            if (padlab::forks_equiv(elems[cls[0]], elems[i], g)) {
                cls.push_back(i);
                placed = true;
                break;
            }
        if (!placed) classes.push_back({i});
    }
    std::vector<padlab::GeometryClass> reps;
    for (size_t c = 0; c < classes.size(); ++c) {
        std::cout << "class " << c << ":";
        for (size_t i : classes[c]) std::cout << " " << names[i];
        std::cout << "\n";
        reps.push_back(padlab::GeometryClass{elems[classes[c][0]]});
    }
    std::cout << "dimension " << padlab::dimension(reps, g) << "\n";
    return 0;
}

int cmd_verify(const std::vector<std::string>& args) {
    padlab::PropertyConfig cfg;
    std::string only;
    for (size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--suite" && i + 1 < args.size())
            only = args[++i];
        else if (args[i] == "--seed" && i + 1 < args.size())
            cfg.seed = std::stoull(args[++i]);
        else if (args[i] == "--instances" && i + 1 < args.size())
            cfg.instances = std::stoi(args[++i]);
        else
            return usage();
    }
    std::vector<padlab::SuiteReport> reports;
    if (only.empty())
        reports = padlab::run_all_suites(cfg);
    else
        reports.push_back(padlab::run_suite(only, cfg));
    bool all_pass = true;
    for (const auto& r : reports) {
        std::cout << r.line() << "\n";
        for (const auto& f : r.failures) std::cout << "  failure: " << f.detail << "\n";
        all_pass = all_pass && r.passed();
    }
    return all_pass ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    if (args.empty()) return usage();
    const std::string cmd = args[0];
    args.erase(args.begin());
    try {
        if (cmd == "closure") return cmd_closure(args);
        if (cmd == "dist") return cmd_dist(args);
        if (cmd == "type") return cmd_type(args);
        if (cmd == "indep") return cmd_indep(args);
        if (cmd == "rank") return cmd_rank(args);
        if (cmd == "epsindep") return cmd_epsindep(args);
        if (cmd == "geom") return cmd_geom(args);
        if (cmd == "verify") return cmd_verify(args);
        return usage();
    } catch (const padlab::parse_error& e) {
        std::cerr << e.name() << ": " << e.what() << "\n";
        return 2;
    } catch (const padlab::dimension_mismatch& e) {
        std::cerr << e.name() << ": " << e.what() << "\n";
        return 2;
    } catch (const padlab::non_prime& e) {
        std::cerr << e.name() << ": " << e.what() << "\n";
        return 2;
    } catch (const padlab::error& e) {
        std::cerr << e.name() << ": " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
