#pragma once

#include "config.hpp"
#include "gaugeqed/cli.hpp"
#include "output.hpp"

#include <string>
#include <vector>

namespace gaugeqed::cli {

struct CheckFailure {
    std::string invariant;
    std::string detail;
};

struct Context {
    const Environment& env;
    OutputTarget output;
    std::vector<CheckFailure> failures;

    void fail_check(std::string invariant, std::string detail) {
        failures.push_back({std::move(invariant), std::move(detail)});
    }
    /// One-line verdicts; printed on stdout only when the data went to a file.
    void summary(const std::string& line) const;
};

void rabi_sweep(const RunConfig& cfg, Context& ctx);
void dicke_sweep(const RunConfig& cfg, Context& ctx);
void taylor_study(const RunConfig& cfg, Context& ctx);
void alpha_check(const RunConfig& cfg, Context& ctx);
void gauge_theorem(const RunConfig& cfg, Context& ctx);
void fluxonium(const RunConfig& cfg, Context& ctx);
void particle_demo(const RunConfig& cfg, Context& ctx);
void full_model(const RunConfig& cfg, Context& ctx);

}  // namespace gaugeqed::cli
