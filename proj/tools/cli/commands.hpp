#pragma once

#include <filesystem>
#include <optional>
#include <string>

namespace hopfkit::cli {

enum class Format { Text, Json };

/// Where and how a report is written.
struct Sink {
  Format format = Format::Text;
  std::optional<std::filesystem::path> out;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitRejected = 1;
inline constexpr int kExitInput = 2;

/// Outcome of one command: the rendered report (possibly empty), a message
/// for stderr and the exit code.
struct CommandResult {
  int exit_code = kExitOk;
  std::string output;
  std::string error;
};

CommandResult cmd_verify(const std::filesystem::path& algebra, Format format);
CommandResult cmd_analyze(const std::filesystem::path& algebra, const std::optional<std::filesystem::path>& characters,
                          Format format);
/// coalgebra: "full", "grouplikes" or the path of a vector file spanning C.
CommandResult cmd_quotient(const std::filesystem::path& algebra, const std::string& coalgebra, Format format,
                           const std::optional<std::filesystem::path>& export_quotient = std::nullopt,
                           const std::optional<std::filesystem::path>& export_morphism = std::nullopt);
/// group: a builtin name or the path of a group file.
CommandResult cmd_enumerate_group(const std::string& group, Format format);
/// With an output path the double is written there and a summary is
/// returned; otherwise the output is the double's algebra file.
CommandResult cmd_double(const std::filesystem::path& algebra, const std::optional<std::filesystem::path>& out,
                         Format format);
CommandResult cmd_report(const std::filesystem::path& algebra, Format format);

/// Writes the result to the sink (or stdout) and the error to stderr.
/// Returns the exit code, which becomes kExitInput if the sink is unwritable.
int emit(const CommandResult& result, const Sink& sink);

}  // namespace hopfkit::cli
