#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fpcutoff/barenblatt.hpp"

namespace fpcutoff::cli {

struct GlobalOptions {
    std::uint64_t seed = 0;
    int threads = 0;
    std::string format;    // "csv" or "json"; empty picks the subcommand default
    std::string out_path;  // empty writes to stdout
};

// Profile selection shared by most subcommands: exactly one of m / alpha.
struct ProfileArgs {
    int d = 0;
    double m = 0.0;
    double alpha = 0.0;
    bool has_m = false;
    bool has_alpha = false;
};

ModelParams resolve_profile(const ProfileArgs& a);

struct DistanceArgs {
    ProfileArgs profile;
    double t = 0.0;
    double x0 = 0.0;
};

struct ScanArgs {
    std::string mode = "fixed-alpha";
    double value = 1.0;
    double eps = 0.1;
    double theta = 0.5;
    double r = 1.0;
    std::string metric = "w2";
    std::vector<int> dims;
};

struct PdeArgs {
    ProfileArgs profile;
    int cells = 1024;
    double length = 10.0;
    double t0 = 0.1;
    double t_end = 1.0;
    double x0 = 0.0;
};

struct SampleArgs {
    ProfileArgs profile;
    int n = 100;
    double x0 = 0.0;
    std::string law = "stationary";  // stationary | unit-time | flow
    double t = 0.0;
};

struct VerifyArgs {
    std::string suite = "all";
};

int cmd_params(const GlobalOptions& g, const ProfileArgs& a);
int cmd_distance(const GlobalOptions& g, const DistanceArgs& a);
int cmd_scan(const GlobalOptions& g, const ScanArgs& a);
int cmd_pde(const GlobalOptions& g, const PdeArgs& a);
int cmd_sample(const GlobalOptions& g, const SampleArgs& a);
int cmd_verify(const GlobalOptions& g, const VerifyArgs& a);

}  // namespace fpcutoff::cli
