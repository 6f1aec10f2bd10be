#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "n2d/agents/agent.hpp"
#include "n2d/envs/env.hpp"
#include "n2d/envs/toy_envs.hpp"

namespace n2d::harness {

/// Bad configuration input; the message names the offending field.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class EnvKind { Chain, Gridworld, MiniPong };

struct RunConfig {
  agents::AgentConfig agent;
  EnvKind env = EnvKind::MiniPong;
  std::size_t chain_length = 5;
  std::size_t grid_width = 5;
  std::size_t grid_height = 5;
  envs::MiniPongConfig pong;
  std::size_t frame_stack = 4;
  std::size_t total_steps = 150000;
  std::size_t eval_period = 2500;
  std::size_t eval_episodes = 5;
  bool checkpoint = true;
};

/// Flat `key = value` settings. Every key has a desk-scale default; keys
/// with a full-scale (Atari) counterpart carry that value too, so
/// config.resolved shows both.
struct KeyInfo {
  std::string key;
  std::string full_scale;  // full-scale value; empty when the original has none
  std::string help;
};

const std::vector<KeyInfo>& config_keys();

/// Sets one key from its textual value. Throws UsageError naming the key.
void set_value(RunConfig& cfg, const std::string& key, const std::string& value);
std::string get_value(const RunConfig& cfg, const std::string& key);

/// "key=value" -> set_value.
void apply_override(RunConfig& cfg, const std::string& assignment);

/// Parses `key = value` lines; '#' starts a comment, blank lines are skipped.
RunConfig parse_config(std::istream& in, const std::string& source = "<config>");
RunConfig load_config(const std::filesystem::path& path);

/// Throws UsageError when a value is out of its declared range.
void validate(const RunConfig& cfg);

/// Every key in declaration order, with the full-scale value as a comment.
/// parse_config() on this output reproduces `cfg`.
void write_resolved(std::ostream& out, const RunConfig& cfg);

/// `stream` picks an independent seed for stochastic serves (training and
/// evaluation environments use different streams).
std::unique_ptr<envs::Environment> make_env(const RunConfig& cfg, std::uint64_t stream = 0);

std::string to_string(EnvKind kind);

}  // namespace n2d::harness
