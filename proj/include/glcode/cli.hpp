#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace glcode::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsage = 2,
  kInfeasible = 3,
};

enum class OutputFormat { Json, Csv, Text };
enum class VerifyLevel { Fast, Full };

struct RunConfig {
  std::size_t n = 2;
  std::uint32_t q = 2;
  std::optional<std::vector<unsigned>> modulus;
  std::string subcommand;
  OutputFormat format = OutputFormat::Json;
  std::uint64_t column_budget = 0;  // 0: GLCODE_BUDGET or the built-in default
  unsigned workers = 1;
};

/// Column budget: explicit value, else GLCODE_BUDGET, else the default.
std::uint64_t resolve_column_budget(std::uint64_t explicit_budget);

int cmd_params(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, VerifyLevel level, std::ostream& out,
               std::ostream& err);
int cmd_table(std::size_t n_max, const std::vector<std::uint32_t>& qs,
              std::ostream& out, std::ostream& err);
int cmd_gen_matrix(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_weights(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_sections(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_bruhat(const RunConfig& cfg, const std::string& matrix_text,
               std::ostream& out, std::ostream& err);

/// Parses argv and dispatches to a subcommand. Honors --out by redirecting
/// the subcommand's stdout to that file.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace glcode::cli
