#include <cstdio>
#include <exception>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "commands.hpp"
#include "fpcutoff/errors.hpp"

namespace {

using fpcutoff::cli::DistanceArgs;
using fpcutoff::cli::GlobalOptions;
using fpcutoff::cli::PdeArgs;
using fpcutoff::cli::ProfileArgs;
using fpcutoff::cli::SampleArgs;
using fpcutoff::cli::ScanArgs;
using fpcutoff::cli::VerifyArgs;

// JSON config support: top-level keys map to global flags, nested objects to
// subcommand flags. Command-line values take precedence over the file.
class JsonConfig : public CLI::Config {
  public:
    std::string to_config(const CLI::App*, bool, bool, std::string) const override {
        return "{}\n";
    }

    std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
        nlohmann::json doc;
        try {
            input >> doc;
        } catch (const nlohmann::json::exception& e) {
            throw CLI::ConfigError(std::string("invalid JSON config: ") + e.what());
        }
        if (!doc.is_object()) {
            throw CLI::ConfigError("config root must be a JSON object");
        }
        std::vector<CLI::ConfigItem> items;
        flatten({}, doc, items);
        return items;
    }

  private:
    static std::string scalar(const nlohmann::json& value) {
        if (value.is_string()) return value.get<std::string>();
        if (value.is_boolean()) return value.get<bool>() ? "true" : "false";
        return value.dump();
    }

    static void flatten(std::vector<std::string> parents, const nlohmann::json& obj,
                        std::vector<CLI::ConfigItem>& items) {
        for (auto it = obj.begin(); it != obj.end(); ++it) {
            const nlohmann::json& value = it.value();
            if (value.is_object()) {
                std::vector<std::string> next = parents;
                next.push_back(it.key());
                flatten(next, value, items);
                continue;
            }
            CLI::ConfigItem item;
            item.parents = parents;
            item.name = it.key();
            if (value.is_array()) {
                for (const auto& el : value) item.inputs.push_back(scalar(el));
            } else {
                item.inputs.push_back(scalar(value));
            }
            items.push_back(item);
        }
    }
};

struct ProfileOpts {
    CLI::Option* m = nullptr;
    CLI::Option* alpha = nullptr;
};

ProfileOpts add_profile_options(CLI::App* sub, ProfileArgs& args) {
    sub->add_option("--d", args.d, "space dimension")->required()->check(CLI::PositiveNumber);
    ProfileOpts opts;
    opts.m = sub->add_option("--m", args.m, "nonlinearity exponent");
    opts.alpha = sub->add_option("--alpha", args.alpha, "self-similar scale exponent");
    opts.m->excludes(opts.alpha);
    return opts;
}

// option counts are read only after the full parse so that config-file
// values are reflected too
void finish_profile(ProfileArgs& args, const ProfileOpts& opts) {
    args.has_m = opts.m->count() > 0;
    args.has_alpha = opts.alpha->count() > 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"closed-form toolkit for the confined porous-medium / fast-diffusion flow"};
    app.fallthrough();
    app.require_subcommand(1);
    app.set_version_flag("--version", "fpcutoff 1.0.0");
    app.config_formatter(std::make_shared<JsonConfig>());
    app.set_config("--config", "", "JSON file with defaults for any flag");

    GlobalOptions global;
    app.add_option("--seed", global.seed, "base RNG seed")->capture_default_str();
    app.add_option("--threads", global.threads,
                   "worker threads (0 = auto, honors CUTOFF_THREADS)")
        ->capture_default_str();
    app.add_option("--format", global.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", global.out_path, "write output to this file instead of stdout");

    ProfileArgs params_args;
    CLI::App* sub_params = app.add_subcommand("params", "derive the profile parameter set");
    const ProfileOpts params_opts = add_profile_options(sub_params, params_args);

    DistanceArgs distance_args;
    CLI::App* sub_distance =
        app.add_subcommand("distance", "closed-form divergences from equilibrium at time t");
    const ProfileOpts distance_opts = add_profile_options(sub_distance, distance_args.profile);
    sub_distance->add_option("--t", distance_args.t, "flow time")->required();
    sub_distance->add_option("--x0", distance_args.x0, "start norm |x0|")
        ->capture_default_str();

    ScanArgs scan_args;
    CLI::App* sub_scan =
        app.add_subcommand("scan", "divergence scan across dimensions around the critical time");
    sub_scan->add_option("--mode", scan_args.mode, "fixed-alpha or fixed-m")
        ->check(CLI::IsMember({"fixed-alpha", "fixed-m"}))
        ->capture_default_str();
    sub_scan->add_option("--value", scan_args.value, "alpha (fixed-alpha) or m (fixed-m)")
        ->required();
    sub_scan->add_option("--eps", scan_args.eps, "relative time offset")->capture_default_str();
    sub_scan->add_option("--theta", scan_args.theta, "start norm exponent: |x0| = r d^theta")
        ->capture_default_str();
    sub_scan->add_option("--r", scan_args.r, "start norm multiplier")->capture_default_str();
    sub_scan->add_option("--metric", scan_args.metric, "w2, entropy or fisher")
        ->check(CLI::IsMember({"w2", "entropy", "fisher"}))
        ->capture_default_str();
    sub_scan->add_option("--dims", scan_args.dims, "dimensions to scan")
        ->required()
        ->delimiter(',')
        ->check(CLI::PositiveNumber);

    PdeArgs pde_args;
    CLI::App* sub_pde =
        app.add_subcommand("pde", "finite-volume solver for the confined nonlinear flow");
    const ProfileOpts pde_opts = add_profile_options(sub_pde, pde_args.profile);
    sub_pde->add_option("--cells", pde_args.cells, "number of grid cells")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    sub_pde->add_option("--length", pde_args.length, "domain half-width (1-D) or radius")
        ->capture_default_str();
    sub_pde->add_option("--t0", pde_args.t0, "initial flow time")->capture_default_str();
    sub_pde->add_option("--t", pde_args.t_end, "target flow time")->capture_default_str();
    sub_pde->add_option("--x0", pde_args.x0, "start norm (1-D only)")->capture_default_str();

    SampleArgs sample_args;
    CLI::App* sub_sample = app.add_subcommand("sample", "exact draws from the profile laws");
    const ProfileOpts sample_opts = add_profile_options(sub_sample, sample_args.profile);
    sub_sample->add_option("--n", sample_args.n, "number of points")
        ->capture_default_str()
        ->check(CLI::Range(1, 100000000));
    sub_sample->add_option("--x0", sample_args.x0, "center norm along the first axis")
        ->capture_default_str();
    sub_sample->add_option("--law", sample_args.law, "stationary, unit-time or flow")
        ->check(CLI::IsMember({"stationary", "unit-time", "flow"}))
        ->capture_default_str();
    sub_sample->add_option("--t", sample_args.t, "flow time (with --law flow)");

    VerifyArgs verify_args;
    CLI::App* sub_verify = app.add_subcommand("verify", "self-check suites");
    sub_verify
        ->add_option("--suite", verify_args.suite,
                     "moments, transport, entropy_production, pde or all")
        ->check(CLI::IsMember({"moments", "transport", "entropy_production", "pde", "all"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    finish_profile(params_args, params_opts);
    finish_profile(distance_args.profile, distance_opts);
    finish_profile(pde_args.profile, pde_opts);
    finish_profile(sample_args.profile, sample_opts);

    try {
        if (sub_params->parsed()) return fpcutoff::cli::cmd_params(global, params_args);
        if (sub_distance->parsed()) return fpcutoff::cli::cmd_distance(global, distance_args);
        if (sub_scan->parsed()) return fpcutoff::cli::cmd_scan(global, scan_args);
        if (sub_pde->parsed()) return fpcutoff::cli::cmd_pde(global, pde_args);
        if (sub_sample->parsed()) return fpcutoff::cli::cmd_sample(global, sample_args);
        if (sub_verify->parsed()) return fpcutoff::cli::cmd_verify(global, verify_args);
        std::fprintf(stderr, "error: no subcommand\n");
        return 2;
    } catch (const fpcutoff::DomainError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const fpcutoff::ConstraintError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const fpcutoff::InfiniteMomentError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const fpcutoff::UnsupportedSizeError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const fpcutoff::PreconditionError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const fpcutoff::ResolutionError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const fpcutoff::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
