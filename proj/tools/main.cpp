// twisted-hecke: compute classes, run verification sweeps, export tables.
//
// Exit codes: 0 success, 1 a verification case failed, 2 invalid input or I/O
// failure (a JSON error object is printed on stdout).

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "twisted_hecke/errors.hpp"
#include "twisted_hecke/flagk.hpp"
#include "twisted_hecke/matschub.hpp"
#include "twisted_hecke/parallel.hpp"
#include "twisted_hecke/suites.hpp"

using namespace th;
using ojson = nlohmann::ordered_json;

namespace {

struct JobSpec {
    std::string command, target;
    std::string system;
    int n = 0;
    std::string w = "id";
    std::string slope;
    std::string route = "right";
    std::string kind, wall;
    int grid = 12;
    int samples = 0;
    std::uint64_t seed = 7;
    std::string format = "text";
    std::string out;
    int jobs = 1;

    ojson json() const {
        ojson j;
        j["command"] = command;
        j["target"] = target;
        j["system"] = system;
        j["w"] = w;
        j["slope"] = slope;
        j["route"] = route;
        j["seed"] = seed;
        j["samples"] = samples;
        j["grid"] = grid;
        if (!kind.empty()) j["kind"] = kind;
        if (!wall.empty()) j["wall"] = wall;
        j["output"] = format;
        j["parallelism"] = jobs;
        return j;
    }
};

struct InvalidUse : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int fail_invalid(const std::string& code, const std::string& msg) {
    ojson e;
    e["error"] = code;
    e["message"] = msg;
    std::cout << e.dump() << "\n";
    return 2;
}

// Writes to --out when given, stdout otherwise.
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw IoFailure("cannot open '" + path + "' for writing");
        }
    }
    std::ostream& os() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }
    void close() {
        if (file_.is_open()) {
            file_.close();
            if (!file_) throw IoFailure("write failed");
        }
    }

private:
    std::ofstream file_;
};

WeylPtr make_group(JobSpec& job) {
    if (job.system.empty()) {
        if (job.n <= 0) throw InvalidUse("give --system or --n");
        job.system = "A" + std::to_string(job.n);
    }
    return WeylGroup::make(RootSystem::parse(job.system));
}

RouteSpec parse_route(const WeylGroup& W, const std::string& r) {
    if (r == "right") return {Route::Right, std::nullopt};
    if (r == "left") return {Route::Left, std::nullopt};
    if (r.rfind("word:", 0) == 0) return {Route::Right, W.parse_word(r.substr(5))};
    throw InvalidUse("route must be left, right or word:<letters>");
}

Weight resolve_slope(const WeylGroup& W, const std::string& s) {
    if (s.empty()) return Weight(static_cast<std::size_t>(W.system().dim()), QRat(0));
    Weight l = parse_weight(s);
    W.system().check_weight(l);
    return l;
}

int element(const WeylGroup& W, const std::string& w, const RouteSpec& route) {
    if (route.word) {
        const int fromw = W.from_word(*route.word);
        if (!W.is_reduced(*route.word))
            throw Error(ErrorCode::NonReducedWord, "word " + W.format_word(*route.word) + " is not reduced");
        if (w.empty() || w == "id") return fromw;
        if (W.parse(w) != fromw) throw InvalidUse("--w and the route word name different elements");
    }
    return W.parse(w);
}

// ---------------------------------------------------------------------------

int run_compute(JobSpec& job) {
    WeylPtr W = make_group(job);
    const Weight l = resolve_slope(*W, job.slope);
    const RouteSpec route = parse_route(*W, job.route);
    const int w = element(*W, job.w, route);
    Sink sink(job.out);
    std::ostream& os = sink.os();
    if (job.target == "mc" || job.target == "stab") {
        LocalizedClass c = mc_cell(W, w, l, route);
        if (job.target == "stab") {
            if (!W->system().is_generic(l))
                throw Error(ErrorCode::NonGenericSlope, "slope " + format_weight(l) + " lies on a wall");
            c = normalize_stab(c, W->length(w));
        }
        if (job.format == "json") os << c.to_json(format_weight(l)) << "\n";
        else if (job.format == "text") os << c.to_text();
        else throw InvalidUse("compute supports text and json");
    } else if (job.target == "matrix") {
        if (W->system().kind() != RootKind::A) throw Error(ErrorCode::WrongType, "matrix classes need type A");
        if (route.word) throw InvalidUse("matrix classes take --route left or right");
        const RatFunc c = mc_matrix(W, w, l, route.route);
        const RatFunc normalized = c / bb_factor(W->system().dim());
        if (job.format == "json") {
            ojson j;
            j["n"] = W->system().dim();
            j["w"] = W->format(w);
            j["slope"] = format_weight(l);
            j["class"] = c.str();
            j["normalized"] = normalized.str();
            os << j.dump() << "\n";
        } else if (job.format == "text") {
            os << "class: " << c.str() << "\nnormalized: " << normalized.str() << "\n";
        } else {
            throw InvalidUse("compute supports text and json");
        }
    } else {
        throw InvalidUse("compute target must be mc, stab or matrix");
    }
    sink.close();
    return 0;
}

SuiteOptions suite_options(const JobSpec& job) {
    SuiteOptions o;
    o.system = job.system;
    if (!job.slope.empty()) o.slope = parse_weight(job.slope);
    o.samples = job.samples;
    o.grid = job.grid;
    o.seed = job.seed;
    o.jobs = job.jobs;
    o.kind = job.kind;
    o.wall = job.wall;
    return o;
}

int run_verify(JobSpec& job) {
    std::vector<std::string> names;
    if (job.target == "all") names = suite_names();
    else names = {job.target};
    const SuiteOptions o = suite_options(job);
    std::vector<SuiteReport> reports;
    for (const std::string& n : names) {
        // in "all", options that only make sense for one suite are dropped
        SuiteOptions oo = o;
        if (job.target == "all") {
            oo.system.clear();
            oo.slope.reset();
            oo.wall.clear();
        }
        reports.push_back(run_suite(n, oo));
    }
    Sink sink(job.out);
    std::ostream& os = sink.os();
    bool ok = true;
    if (job.format == "json") {
        ojson j;
        j["job"] = job.json();
        ojson arr = ojson::array();
        for (const SuiteReport& r : reports) {
            ojson s;
            s["suite"] = r.name;
            s["passed"] = static_cast<int>(r.cases.size()) - r.failures();
            s["failed"] = r.failures();
            ojson cases = ojson::array();
            for (const CaseResult& c : r.cases) {
                ojson cj;
                cj["id"] = c.id;
                cj["ok"] = c.ok;
                if (!c.ok) cj["detail"] = c.detail;
                cases.push_back(cj);
            }
            s["cases"] = cases;
            s["notes"] = r.notes;
            arr.push_back(s);
            ok = ok && r.ok();
        }
        j["suites"] = arr;
        j["ok"] = ok;
        os << j.dump(2) << "\n";
    } else if (job.format == "text") {
        for (const SuiteReport& r : reports) {
            for (const CaseResult& c : r.cases) {
                os << (c.ok ? "PASS " : "FAIL ") << r.name << " | " << c.id << "\n";
                if (!c.ok) os << "     " << c.detail << "\n";
            }
            for (const std::string& n : r.notes) os << "note " << r.name << " | " << n << "\n";
            os << "== " << r.name << ": " << r.cases.size() - static_cast<std::size_t>(r.failures()) << " passed, "
               << r.failures() << " failed\n";
            ok = ok && r.ok();
        }
    } else {
        throw InvalidUse("verify supports text and json");
    }
    sink.close();
    return ok ? 0 : 1;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

void write_table(std::ostream& os, const std::string& format, const WeylPtr& W,
                 const std::vector<std::pair<Weight, std::vector<LocalizedClass>>>& blocks, bool with_slope) {
    if (format == "csv") {
        if (with_slope) os << "slope,";
        os << "w,length";
        for (int s = 0; s < W->size(); ++s) os << "," << csv_field(W->format(s));
        os << "\n";
        for (const auto& [l, classes] : blocks)
            for (int w = 0; w < W->size(); ++w) {
                if (with_slope) os << csv_field(format_weight(l)) << ",";
                os << csv_field(W->format(w)) << "," << W->length(w);
                for (int s = 0; s < W->size(); ++s) os << "," << csv_field(classes[static_cast<std::size_t>(w)][s].str());
                os << "\n";
            }
    } else if (format == "json") {
        ojson rows = ojson::array();
        for (const auto& [l, classes] : blocks)
            for (int w = 0; w < W->size(); ++w) {
                ojson r;
                r["slope"] = format_weight(l);
                r["w"] = W->format(w);
                r["length"] = W->length(w);
                ojson res = ojson::object();
                for (int s = 0; s < W->size(); ++s) res[W->format(s)] = classes[static_cast<std::size_t>(w)][s].str();
                r["restrictions"] = res;
                rows.push_back(r);
            }
        ojson j;
        j["system"] = W->system().name();
        j["rows"] = rows;
        os << j.dump(2) << "\n";
    } else {
        throw InvalidUse("export supports csv and json");
    }
}

std::vector<LocalizedClass> all_classes(const WeylPtr& W, const Weight& l, Route route, int jobs) {
    auto parts = parallel_map(static_cast<std::size_t>(W->size()), jobs, [&](std::size_t w) {
        return std::optional<LocalizedClass>(mc_cell(W, static_cast<int>(w), l, route));
    });
    std::vector<LocalizedClass> out;
    for (auto& p : parts) out.push_back(std::move(*p));
    return out;
}

int run_export(JobSpec& job) {
    WeylPtr W = make_group(job);
    const RouteSpec route = parse_route(*W, job.route);
    if (route.word) throw InvalidUse("export takes --route left or right");
    if (job.target == "table") {
        const Weight l = resolve_slope(*W, job.slope);
        Sink sink(job.out);
        write_table(sink.os(), job.format, W, {{l, all_classes(W, l, route.route, job.jobs)}}, false);
        sink.close();
        return 0;
    }
    if (job.target == "alcove") {
        const Weight l = resolve_slope(*W, job.slope);
        if (!W->system().is_generic(l)) throw Error(ErrorCode::NonGenericSlope, "alcove sweep needs an interior slope");
        // seeded perturbations that stay inside the alcove of l
        std::mt19937_64 rng(job.seed);
        std::uniform_int_distribution<long> num(-9, 9);
        std::vector<Weight> slopes = {l};
        const int want = job.samples > 0 ? job.samples : 2;
        for (int tries = 0; static_cast<int>(slopes.size()) < want + 1 && tries < 10000; ++tries) {
            Weight m = l;
            for (QRat& c : m) c += QRat(num(rng), 97);
            if (W->system().same_alcove(l, m)) slopes.push_back(m);
        }
        std::vector<std::pair<Weight, std::vector<LocalizedClass>>> blocks;
        bool same = true;
        for (const Weight& m : slopes) {
            blocks.emplace_back(m, all_classes(W, m, route.route, job.jobs));
            same = same && blocks.back().second == blocks.front().second;
        }
        Sink sink(job.out);
        write_table(sink.os(), job.format, W, blocks, true);
        sink.close();
        std::cerr << "alcove sweep: " << slopes.size() << " slopes, classes " << (same ? "identical" : "DIFFER") << "\n";
        return same ? 0 : 1;
    }
    throw InvalidUse("export target must be table or alcove");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Twisted motivic Chern classes of Schubert cells: compute, verify, export"};
    app.require_subcommand(1);
    JobSpec job;

    auto common = [&](CLI::App* c) {
        c->add_option("--system", job.system, "A<n> (GL_n), C2 or G2");
        c->add_option("--n", job.n, "rank n for GL_n (same as --system A<n>)");
        c->add_option("--slope", job.slope, "slope as exact rationals, e.g. 1/7,2/7,0");
        c->add_option("--route", job.route, "left, right or word:<letters>");
        c->add_option("--seed", job.seed, "seed for sampled slopes and grids");
        c->add_option("--format", job.format, "text, json or csv");
        c->add_option("--out", job.out, "output file (default stdout)");
        c->add_option("--jobs", job.jobs, "worker threads (TWISTED_HECKE_JOBS overrides)");
    };

    CLI::App* compute = app.add_subcommand("compute", "compute a class");
    compute->add_option("what", job.target, "mc, stab or matrix")->required();
    compute->add_option("--w", job.w, "Weyl group element: one-line (231) or word (s1 s2)");
    common(compute);

    CLI::App* verify = app.add_subcommand("verify", "run a verification sweep");
    std::string suites = "all";
    for (const std::string& n : suite_names()) suites += ", " + n;
    verify->add_option("suite", job.target, suites)->required();
    verify->add_option("--samples,--slopes", job.samples, "number of sampled slopes or parameters");
    verify->add_option("--grid", job.grid, "denominator of the fractional parameter grid");
    verify->add_option("--kind", job.kind, "braid form: A, C2, G2");
    verify->add_option("--wall", job.wall, "wall root: a<i> or an integer vector");
    common(verify);

    CLI::App* exp = app.add_subcommand("export", "export class tables");
    exp->add_option("what", job.target, "table or alcove")->required();
    exp->add_option("--samples", job.samples, "extra slopes in the alcove sweep");
    common(exp);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail_invalid("InvalidInput", e.what());
    }

    job.jobs = resolve_jobs(job.jobs);
    if (job.system.empty() && job.n > 0) job.system = "A" + std::to_string(job.n);
    if (compute->parsed()) job.command = "compute";
    else if (verify->parsed()) job.command = "verify";
    else job.command = "export";
    if (job.command == "export" && job.format == "text") job.format = "csv";
    std::cerr << "job: " << job.json().dump() << "\n";

    try {
        if (job.command == "compute") return run_compute(job);
        if (job.command == "verify") return run_verify(job);
        return run_export(job);
    } catch (const Error& e) {
        return fail_invalid(error_name(e.code()), e.what());
    } catch (const InvalidUse& e) {
        return fail_invalid("InvalidInput", e.what());
    } catch (const IoFailure& e) {
        return fail_invalid("IOError", e.what());
    } catch (const std::exception& e) {
        return fail_invalid("InvalidInput", e.what());
    }
}
