#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace cli {

std::string sha256_hex(std::string_view data);
std::string read_file(const std::string& path);  // CliError(1) when unreadable
void write_file(const std::string& path, std::string_view data);

// RFC 4180: fields containing a comma, quote, CR or LF are quoted with inner
// quotes doubled; records end in CRLF.
std::string csv_field(std::string_view s);
std::string csv_record(const std::vector<std::string>& fields);

// Shortest form that parses back to the same double; "inf"/"nan" otherwise.
std::string format_double(double x);

// Where a resolved setting came from.
enum class Source { flag, env, fallback };

using EnvLookup = std::function<std::optional<std::string>(const char*)>;
EnvLookup process_env();
EnvLookup no_env();

template <class T>
struct Resolved {
  T value;
  Source source;
};

// Precedence: flag, then the environment variable, then the default. A
// malformed environment value is an input error.
Resolved<std::uint64_t> resolve_u64(const std::optional<std::uint64_t>& flag, const char* env_name,
                                    std::uint64_t fallback, const EnvLookup& env);
Resolved<double> resolve_double(const std::optional<double>& flag, const char* env_name, double fallback,
                                const EnvLookup& env);

// ---- bench suites -------------------------------------------------------

struct SuiteInstance {
  std::string name;
  std::string kind;  // planted | kneser | dimacs
  std::size_t n = 0, k = 0;
  double p = 0.0;
  std::uint32_t m = 0, r = 0, t = 0;
  std::string path;  // resolved against the suite file's directory
  std::optional<std::uint64_t> seed;
};

struct Suite {
  std::vector<std::string> methods;
  std::vector<SuiteInstance> instances;
};

Suite parse_suite(std::string_view text, const std::string& base_dir);

}  // namespace cli
