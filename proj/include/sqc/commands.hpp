#ifndef SQC_COMMANDS_HPP
#define SQC_COMMANDS_HPP

#include <string>

#include "sqc/config.hpp"

namespace sqc::commands {

// Command entry points used by the CLI and by tests. Each resolves its
// configuration, runs, and writes CSV output under out_dir (created if
// absent). Configuration problems throw std::invalid_argument (exit code 2),
// runtime failures std::runtime_error (exit code 1).

void cmd_moments(const config::Config& cfg, const std::string& out_dir);
void cmd_theory(const config::Config& cfg, const std::string& out_dir);
void cmd_run(const config::Config& cfg, const std::string& out_dir, int threads);
void cmd_sweep(const config::Config& cfg, const std::string& out_dir, int threads);
void cmd_psd(const config::Config& cfg, const std::string& out_dir, int threads);

}  // namespace sqc::commands

#endif
