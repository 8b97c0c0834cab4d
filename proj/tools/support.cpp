#include "support.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <openssl/evp.h>

#include "capi.hpp"

namespace cli {

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw CliError(kExitInternal, "sha256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 15]);
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError(kExitInput, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw CliError(kExitInput, "cannot write " + path);
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  if (!out) throw CliError(kExitInput, "short write to " + path);
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string csv_record(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out.push_back(',');
    out += csv_field(fields[i]);
  }
  out += "\r\n";
  return out;
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

EnvLookup process_env() {
  return [](const char* name) -> std::optional<std::string> {
    const char* v = std::getenv(name);
    if (v == nullptr || *v == '\0') return std::nullopt;
    return std::string(v);
  };
}

EnvLookup no_env() {
  return [](const char*) -> std::optional<std::string> { return std::nullopt; };
}

namespace {

template <class T>
T parse_env(const char* name, const std::string& text) {
  T value{};
  auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size())
    throw CliError(kExitInput, std::string("malformed ") + name + "=" + text);
  return value;
}

}  // namespace

Resolved<std::uint64_t> resolve_u64(const std::optional<std::uint64_t>& flag, const char* env_name,
                                    std::uint64_t fallback, const EnvLookup& env) {
  if (flag) return {*flag, Source::flag};
  if (auto v = env(env_name)) return {parse_env<std::uint64_t>(env_name, *v), Source::env};
  return {fallback, Source::fallback};
}

Resolved<double> resolve_double(const std::optional<double>& flag, const char* env_name, double fallback,
                                const EnvLookup& env) {
  if (flag) return {*flag, Source::flag};
  if (auto v = env(env_name)) {
    const double x = parse_env<double>(env_name, *v);
    if (!(x > 0.0) || !std::isfinite(x)) throw CliError(kExitInput, std::string(env_name) + " must be positive");
    return {x, Source::env};
  }
  return {fallback, Source::fallback};
}

Suite parse_suite(std::string_view text, const std::string& base_dir) {
  using nlohmann::json;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw CliError(kExitInput, std::string("suite is not valid JSON: ") + e.what());
  }
  auto bad = [](const std::string& why) { return CliError(kExitInput, "suite: " + why); };
  if (!j.is_object()) throw bad("top level must be an object");

  Suite s;
  try {
    if (j.contains("methods")) {
      for (const auto& m : j.at("methods")) {
        const std::string name = m.get<std::string>();
        if (name != "hyperplane" && name != "projection" && name != "auto") throw bad("unknown method " + name);
        s.methods.push_back(name);
      }
    } else {
      s.methods = {"projection"};
    }
    const json& list = j.at("instances");
    if (!list.is_array()) throw bad("instances must be an array");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const json& e = list[i];
      SuiteInstance inst;
      inst.name = e.value("name", "instance" + std::to_string(i));
      if (e.contains("seed")) inst.seed = e.at("seed").get<std::uint64_t>();
      if (e.contains("planted")) {
        const json& p = e.at("planted");
        inst.kind = "planted";
        inst.n = p.at("n").get<std::size_t>();
        inst.k = p.at("k").get<std::size_t>();
        inst.p = p.at("p").get<double>();
      } else if (e.contains("kneser")) {
        const json& p = e.at("kneser");
        inst.kind = "kneser";
        inst.m = p.at("m").get<std::uint32_t>();
        inst.r = p.at("r").get<std::uint32_t>();
        inst.t = p.at("t").get<std::uint32_t>();
      } else if (e.contains("dimacs")) {
        inst.kind = "dimacs";
        std::filesystem::path path = e.at("dimacs").get<std::string>();
        if (path.is_relative() && !base_dir.empty()) path = std::filesystem::path(base_dir) / path;
        inst.path = path.string();
      } else {
        throw bad("instance " + inst.name + " needs one of planted, kneser, dimacs");
      }
      s.instances.push_back(std::move(inst));
    }
  } catch (const json::exception& e) {
    throw bad(e.what());
  }
  return s;
}

}  // namespace cli
