#include "pathint/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "pathint/controlled.hpp"
#include "pathint/csv.hpp"
#include "pathint/errors.hpp"
#include "pathint/generators.hpp"
#include "pathint/reports.hpp"
#include "pathint/rough_path.hpp"
#include "pathint/roughness.hpp"

namespace pathint::cli {

namespace {

struct Options {
    std::string command;
    std::string path_file;
    std::string kind = "brownian";
    int dim = 1;
    std::uint64_t seed = 1;
    std::size_t grid_points = (std::size_t{1} << 14) + 1;
    double t_max = 1.0;
    double hurst = 0.75;
    int monomial_q = 2;
    int zigzag_teeth = 4;
    double gamma = 0.0;
    double p = 2.5;
    std::string levels = "4:10";
    std::string partition = "dyadic";
    std::string partition_b;
    std::string control = "pvar";
    double epsilon = 0.1;
    double tol = 1e-3;
    std::string integrand = "identity";
    std::string out_file;
    std::string config_file;
};

// Keys accepted in a config document; anything else is a validation error.
const std::vector<std::string> kConfigKeys = {
    "path",      "kind",    "dim",       "seed",        "grid-points", "t-max",
    "hurst",     "q",       "teeth",     "gamma",       "p",           "levels",
    "partition", "partition-b", "control", "epsilon",   "tol",         "f",
    "out"};

void apply_config_file(Options& opt, const CLI::App& app) {
    std::ifstream in(opt.config_file);
    if (!in) throw IoError("config: cannot open " + opt.config_file);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("config: parse error: ") + e.what());
    }
    if (!doc.is_object()) throw std::invalid_argument("config: document must be an object");

    auto flag_given = [&app](const std::string& name) {
        auto* o = app.get_option_no_throw("--" + name);
        return o != nullptr && o->count() > 0;
    };
    for (const auto& [key, value] : doc.items()) {
        if (std::find(kConfigKeys.begin(), kConfigKeys.end(), key) == kConfigKeys.end())
            throw std::invalid_argument("config: unknown key '" + key + "'");
        if (flag_given(key)) continue;  // command line wins
        if (key == "path") opt.path_file = value.get<std::string>();
        else if (key == "kind") opt.kind = value.get<std::string>();
        else if (key == "dim") opt.dim = value.get<int>();
        else if (key == "seed") opt.seed = value.get<std::uint64_t>();
        else if (key == "grid-points") opt.grid_points = value.get<std::size_t>();
        else if (key == "t-max") opt.t_max = value.get<double>();
        else if (key == "hurst") opt.hurst = value.get<double>();
        else if (key == "q") opt.monomial_q = value.get<int>();
        else if (key == "teeth") opt.zigzag_teeth = value.get<int>();
        else if (key == "gamma") opt.gamma = value.get<double>();
        else if (key == "p") opt.p = value.get<double>();
        else if (key == "levels") opt.levels = value.get<std::string>();
        else if (key == "partition") opt.partition = value.get<std::string>();
        else if (key == "partition-b") opt.partition_b = value.get<std::string>();
        else if (key == "control") opt.control = value.get<std::string>();
        else if (key == "epsilon") opt.epsilon = value.get<double>();
        else if (key == "tol") opt.tol = value.get<double>();
        else if (key == "f") opt.integrand = value.get<std::string>();
        else if (key == "out") opt.out_file = value.get<std::string>();
    }
}

void validate(const Options& opt) {
    if (!(opt.gamma >= 0.0 && opt.gamma <= 1.0))
        throw std::invalid_argument("gamma: must be in [0,1]");
    if (!(opt.p > 2.0 && opt.p < 3.0)) throw std::invalid_argument("p: must be in (2,3)");
    if (opt.kind == "fbm" && !(opt.hurst > 0.0 && opt.hurst < 1.0))
        throw std::invalid_argument("hurst: must be in (0,1)");
    if (opt.dim < 1) throw std::invalid_argument("dim: must be >= 1");
    if (opt.grid_points < 2) throw std::invalid_argument("grid-points: must be >= 2");
    if (!(opt.t_max > 0.0)) throw std::invalid_argument("t-max: must be positive");
    if (!(opt.tol > 0.0)) throw std::invalid_argument("tol: must be positive");
    if (!(opt.epsilon > 0.0)) throw std::invalid_argument("epsilon: must be positive");
}

std::pair<int, int> parse_levels(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("levels: expected a:b");
    const int lo = std::stoi(spec.substr(0, colon));
    const int hi = std::stoi(spec.substr(colon + 1));
    if (lo < 0 || hi < lo) throw std::invalid_argument("levels: need 0 <= a <= b");
    return {lo, hi};
}

SamplePath load_or_generate(const Options& opt) {
    if (!opt.path_file.empty()) return read_path_csv(opt.path_file);
    GridPtr grid = share(TimeGrid::equidistant(opt.t_max, opt.grid_points));
    if (opt.kind == "brownian") return gen_brownian(grid, opt.dim, opt.seed);
    if (opt.kind == "fbm") return gen_fbm(grid, opt.hurst, opt.seed, opt.dim);
    if (opt.kind == "gbm") {
        auto drift = [](double, const std::vector<double>& x) {
            return std::vector<double>(x.size(), 0.0);
        };
        auto vol = [](double, const std::vector<double>& x) { return x; };
        return gen_ito_euler(grid, drift, vol, 1, opt.seed, std::vector<double>{1.0});
    }
    if (opt.kind == "linear") return linear_path(grid, opt.dim);
    if (opt.kind == "circle") return circle_path(grid);
    if (opt.kind == "monomial") return monomial_path(grid, opt.monomial_q);
    if (opt.kind == "zigzag") return zigzag_path(grid, opt.zigzag_teeth);
    throw std::invalid_argument("kind: unknown generator '" + opt.kind + "'");
}

PartitionSequence make_sequence(const SamplePath& path, const std::string& spec, int lo, int hi) {
    if (lo < 1) lo = 1;
    if (spec == "dyadic") {
        PartitionSequence full = dyadic_sequence(path.grid_ptr(), hi);
        PartitionSequence out;
        out.grid = full.grid;
        for (int n = lo; n <= hi; ++n) {
            out.levels.push_back(full.levels[static_cast<std::size_t>(n - 1)]);
            out.level_ids.push_back(n);
        }
        return out;
    }
    if (spec == "lebesgue") return lebesgue_sequence(path, lo, hi);
    if (spec.rfind("equidistant:", 0) == 0) {
        const std::string args = spec.substr(std::string("equidistant:").size());
        const auto comma = args.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("partition: expected equidistant:N0,k");
        const std::size_t n0 = static_cast<std::size_t>(std::stoull(args.substr(0, comma)));
        const std::size_t base = static_cast<std::size_t>(std::stoull(args.substr(comma + 1)));
        if (n0 == 0 || base < 2) throw std::invalid_argument("partition: equidistant needs N0 >= 1, k >= 2");
        std::vector<std::size_t> counts;
        std::size_t c = n0;
        for (int n = 1; n < lo; ++n) c *= base;
        for (int n = lo; n <= hi; ++n) {
            counts.push_back(c);
            c *= base;
        }
        PartitionSequence seq = equidistant_sequence(path.grid_ptr(), counts);
        for (std::size_t k = 0; k < seq.size(); ++k) seq.level_ids[k] = lo + static_cast<int>(k);
        return seq;
    }
    throw std::invalid_argument("partition: unknown spec '" + spec + "'");
}

ControlFunction make_control(const SamplePath& path, const Options& opt) {
    if (opt.control == "pvar") return control_from_pvar(path, opt.p);
    if (opt.control == "hoelder") return hoelder_control(path.grid_ptr(), 1.0, 1.0);
    throw std::invalid_argument("control: unknown kind '" + opt.control + "'");
}

ControlledPath make_integrand(const SamplePath& x, const std::string& name) {
    const int d = x.dim();
    if (name == "identity") {
        auto f = [d](std::span<const double> v) {
            return std::vector<double>(v.begin(), v.begin() + d);
        };
        auto df = [d](std::span<const double>) {
            std::vector<double> jac(static_cast<std::size_t>(d) * d, 0.0);
            for (int i = 0; i < d; ++i) jac[static_cast<std::size_t>(i) * d + i] = 1.0;
            return jac;
        };
        return controlled_from_c2(f, df, x, 1);
    }
    if (name == "sin") {
        auto f = [d](std::span<const double> v) {
            std::vector<double> out(static_cast<std::size_t>(d));
            for (int i = 0; i < d; ++i) out[static_cast<std::size_t>(i)] = std::sin(v[static_cast<std::size_t>(i)]);
            return out;
        };
        auto df = [d](std::span<const double> v) {
            std::vector<double> jac(static_cast<std::size_t>(d) * d, 0.0);
            for (int i = 0; i < d; ++i)
                jac[static_cast<std::size_t>(i) * d + i] = std::cos(v[static_cast<std::size_t>(i)]);
            return jac;
        };
        return controlled_from_c2(f, df, x, 1);
    }
    throw std::invalid_argument("f: unknown integrand '" + name + "'");
}

json effective_config(const Options& opt) {
    json j;
    j["path"] = opt.path_file;
    j["kind"] = opt.kind;
    j["dim"] = opt.dim;
    j["seed"] = opt.seed;
    j["grid-points"] = opt.grid_points;
    j["t-max"] = opt.t_max;
    j["hurst"] = opt.hurst;
    j["q"] = opt.monomial_q;
    j["teeth"] = opt.zigzag_teeth;
    j["gamma"] = opt.gamma;
    j["p"] = opt.p;
    j["levels"] = opt.levels;
    j["partition"] = opt.partition;
    j["partition-b"] = opt.partition_b;
    j["control"] = opt.control;
    j["epsilon"] = opt.epsilon;
    j["tol"] = opt.tol;
    j["f"] = opt.integrand;
    j["out"] = opt.out_file;
    return j;
}

void emit(const Options& opt, json result) {
    json envelope;
    envelope["schema_version"] = "1";
    envelope["command"] = opt.command;
    const auto now = std::chrono::system_clock::now();
    envelope["timestamp"] =
        static_cast<std::int64_t>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                      now.time_since_epoch())
                                      .count());
    envelope["config"] = effective_config(opt);
    envelope["result"] = std::move(result);
    const std::string text = envelope.dump(2) + "\n";
    if (opt.out_file.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(opt.out_file);
        if (!out) throw IoError("out: cannot open " + opt.out_file);
        out << text;
        if (!out) throw IoError("out: write failed on " + opt.out_file);
    }
}

int dispatch(Options& opt) {
    validate(opt);
    auto [lo, hi] = parse_levels(opt.levels);

    if (opt.command == "generate") {
        const SamplePath path = load_or_generate(opt);
        const std::string file = opt.out_file.empty() ? "path.csv" : opt.out_file;
        write_path_csv(path, file);
        std::cout << "wrote " << file << ": " << path.length() << " points, dim " << path.dim()
                  << ", T = " << path.grid().t_max() << "\n";
        return 0;
    }

    const SamplePath path = load_or_generate(opt);
    const PartitionSequence seq = make_sequence(path, opt.partition, lo, hi);

    if (opt.command == "qv" || opt.command == "levy") {
        std::vector<RunningIntegral> levels;
        std::vector<std::size_t> cells;
        for (const Partition& part : seq.levels) {
            levels.push_back(opt.command == "qv" ? quadratic_variation(path, part)
                                                 : levy_area_sum(path, part));
            cells.push_back(part.cells());
        }
        emit(opt, to_json(cauchy_report(levels, cells, seq.level_ids, opt.tol)));
        return 0;
    }
    if (opt.command == "integrate") {
        const ControlledPath cp = make_integrand(path, opt.integrand);
        const IntegralResult res =
            pathwise_integral(cp, path, seq, GammaWeight(opt.gamma), opt.tol, true, opt.p);
        emit(opt, to_json(res));
        return 0;
    }
    if (opt.command == "rie-check") {
        const ControlFunction control = make_control(path, opt);
        const RieReport rep = rie_check(path, seq, GammaWeight(opt.gamma), opt.p, control);
        emit(opt, to_json(rep));
        return 0;
    }
    if (opt.command == "roughness") {
        const RoughnessSide side = roughness_analysis(path, seq, opt.p, opt.epsilon);
        json j = to_json(side);
        j["p"] = opt.p;
        j["epsilon"] = opt.epsilon;
        emit(opt, std::move(j));
        return 0;
    }
    if (opt.command == "invariance") {
        if (opt.partition_b.empty())
            throw std::invalid_argument("partition-b: required for invariance");
        const PartitionSequence seq_b = make_sequence(path, opt.partition_b, lo, hi);
        const InvarianceReport rep = invariance_experiment(path, seq, seq_b, opt.p, opt.epsilon);
        emit(opt, to_json(rep));
        return 0;
    }
    throw std::invalid_argument("unknown command '" + opt.command + "'");
}

}  // namespace

int run(const std::vector<std::string>& args) {
    Options opt;
    CLI::App app{"pathwise stochastic integration toolkit"};
    app.require_subcommand(1);

    std::vector<CLI::App*> subs;
    for (const char* name :
         {"generate", "integrate", "qv", "levy", "rie-check", "roughness", "invariance"})
        subs.push_back(app.add_subcommand(name));

    for (CLI::App* sub : subs) {
        sub->add_option("--path", opt.path_file, "input path CSV");
        sub->add_option("--kind", opt.kind, "generator: brownian|fbm|gbm|linear|circle|monomial|zigzag");
        sub->add_option("--dim", opt.dim, "path dimension");
        sub->add_option("--seed", opt.seed, "generator seed");
        sub->add_option("--grid-points", opt.grid_points, "fine grid point count");
        sub->add_option("--t-max", opt.t_max, "time horizon T");
        sub->add_option("--hurst", opt.hurst, "fbm Hurst parameter");
        sub->add_option("--q", opt.monomial_q, "monomial exponent");
        sub->add_option("--teeth", opt.zigzag_teeth, "zigzag teeth");
        sub->add_option("--gamma", opt.gamma, "Riemann-point weight in [0,1]");
        sub->add_option("--p", opt.p, "variation exponent in (2,3)");
        sub->add_option("--levels", opt.levels, "level range a:b");
        sub->add_option("--partition", opt.partition, "dyadic|equidistant:N0,k|lebesgue");
        sub->add_option("--partition-b", opt.partition_b, "second sequence for invariance");
        sub->add_option("--control", opt.control, "pvar|hoelder");
        sub->add_option("--epsilon", opt.epsilon, "alignment epsilon");
        sub->add_option("--tol", opt.tol, "convergence tolerance (relative)");
        sub->add_option("--f", opt.integrand, "integrand: identity|sin");
        sub->add_option("--out", opt.out_file, "output file");
        sub->add_option("--config", opt.config_file, "JSON config file");
    }

    std::vector<const char*> argv;
    argv.push_back("pathint");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            std::cout << app.help();
            return 0;
        }
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    CLI::App* active = app.get_subcommands().front();
    opt.command = active->get_name();
    try {
        if (!opt.config_file.empty()) apply_config_file(opt, *active);
        return dispatch(opt);
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 3;
    } catch (const NumericError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 4;
    }
}

}  // namespace pathint::cli
