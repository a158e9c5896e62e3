// Copyright 2026 The IDAK Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "idak/cli.h"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "idak/encoding.h"
#include "idak/error.h"
#include "idak/keystore.h"
#include "idak/pairing.h"
#include "idak/protocol.h"
#include "idak/scenario.h"
#include "idak/self_reduction.h"

namespace idak::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr std::string_view kBanner =
    "WARNING: toy supersingular-curve parameters for experimentation only; "
    "not production-secure.";

// Misuse detected after parsing; maps to kExitUsage.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Embedded check that did not hold; maps to kExitAssertion.
struct AssertionFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GlobalFlags {
  std::string params_file;
  std::string seed;
  std::string pi = "hash-half";
  std::string strategy = "c2-pre";
  std::string mode;
  bool quiet = false;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteFile(const std::string& path, std::string_view data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path);
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  if (!out) throw IoError("write failed for " + path);
}

void WriteBytes(const std::string& path, ByteView data) {
  WriteFile(path, std::string_view(reinterpret_cast<const char*>(data.data()),
                                   data.size()));
}

Bytes SeedBytes(const GlobalFlags& g) {
  if (!g.seed.empty()) return ToBytes(g.seed);
  std::random_device rd;
  Bytes seed(32);
  for (auto& b : seed) b = static_cast<uint8_t>(rd());
  return seed;
}

PiVariant PiFlag(const GlobalFlags& g) {
  try {
    return ParsePiVariant(g.pi);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

DeriveStrategy StrategyFlag(const GlobalFlags& g) {
  try {
    return ParseStrategy(g.strategy);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::string RequireParamsPath(const GlobalFlags& g) {
  if (g.params_file.empty()) throw UsageError("--params is required");
  return g.params_file;
}

SystemParams LoadParams(const GlobalFlags& g) {
  KeyStoreEntry e = Dearmor(ReadFile(RequireParamsPath(g)), "params");
  return MakeSystemParams(DecodeParams(e.payload), PiFlag(g));
}

MasterSecret LoadMaster(const SystemParams& params, const std::string& path) {
  KeyStoreEntry e = Dearmor(ReadFile(path), "master");
  return DecodeMaster(params.group, e.payload);
}

IdentityKey LoadIdentity(const SystemParams& params, const std::string& path) {
  KeyStoreEntry e = Dearmor(ReadFile(path), "identity");
  return DecodeIdentityKey(params.group, e.payload);
}

std::string FormatHalves(int halves) {
  if (halves % 2 == 0) return std::to_string(halves / 2);
  return std::to_string(halves / 2) + ".5";
}

json CountsJson(const OpCounts& c) {
  return json{{"pairings", c.pairings},
              {"exp_g", c.exp_g()},
              {"mul_g", c.mul_g},
              {"exp_gt", c.exp_gt}};
}

void Emit(std::ostream& out, const json& j) { out << j.dump() << "\n"; }

std::string SessionKeyFile(const SessionKey& key, bool pfs) {
  KeyStoreEntry e{"session", {{"pfs", pfs ? "1" : "0"}},
                  Bytes(key.key.begin(), key.key.end())};
  return Armor(e);
}

// ---- commands ----

int CmdSetup(const GlobalFlags& g, int k_bits, const std::string& out_dir,
             std::ostream& out, std::ostream& err) {
  if (k_bits < kMinKBits || k_bits > kMaxKBits) {
    throw UsageError("--k-bits must be in [" + std::to_string(kMinKBits) +
                     ", " + std::to_string(kMaxKBits) + "]");
  }
  Bytes seed = SeedBytes(g);
  auto [params, msk] = Setup(k_bits, seed, PiFlag(g));
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  std::string params_path = (fs::path(out_dir) / "params.key").string();
  std::string master_path = (fs::path(out_dir) / "master.key").string();
  WriteFile(params_path,
            Armor({"params",
                   {{"k_bits", std::to_string(params.group.k_bits())}},
                   EncodeParams(params.group)}));
  WriteFile(master_path,
            Armor({"master", {}, EncodeMaster(params.group, msk)}));
  if (!g.quiet) err << kBanner << "\n";
  Emit(out, json{{"params", params_path},
                 {"master", master_path},
                 {"p", params.group.p.get_str()},
                 {"q", params.group.q.get_str()},
                 {"h", params.group.h.get_str()}});
  return kExitOk;
}

int CmdExtract(const GlobalFlags& g, const std::string& master_file,
               const std::string& id, const std::string& out_file,
               std::ostream& out) {
  if (id.empty()) throw UsageError("--id must be nonempty");
  SystemParams params = LoadParams(g);
  MasterSecret msk = LoadMaster(params, master_file);
  IdentityKey key = Extract(params, msk, id);
  WriteFile(out_file,
            Armor({"identity", {{"id", HexEncode(key.id)}},
                   EncodeIdentityKey(params.group, key)}));
  Emit(out, json{{"id", id},
                 {"g_id", HexEncode(EncodePoint(params.group, key.g_id))},
                 {"key", out_file}});
  return kExitOk;
}

int CmdVerifyKey(const GlobalFlags& g, const std::string& master_file,
                 const std::string& key_file, std::ostream& out) {
  SystemParams params = LoadParams(g);
  MasterSecret msk = LoadMaster(params, master_file);
  IdentityKey key = LoadIdentity(params, key_file);
  const GroupParams& group = params.group;
  GElem g_alpha = ScalarExp(group, params.g, msk.alpha);
  bool ok = Pairing(group, key.d_id, params.g) ==
            Pairing(group, key.g_id, g_alpha);
  Emit(out, json{{"id", std::string(key.id.begin(), key.id.end())},
                 {"valid", ok}});
  if (!ok) throw AssertionFailure("private key does not verify against g^alpha");
  return kExitOk;
}

Drbg EphemeralRng(const GlobalFlags& g, std::string_view role) {
  return Drbg(Sha256({ToBytes("idak-cli-ephemeral"), SeedBytes(g),
                      ToBytes(role)}));
}

int CmdInitiate(const GlobalFlags& g, const std::string& key_file,
                const std::string& peer, const std::string& out_file,
                std::string state_file, std::ostream& out) {
  if (peer.empty()) throw UsageError("--peer must be nonempty");
  SystemParams params = LoadParams(g);
  IdentityKey own = LoadIdentity(params, key_file);
  Drbg rng = EphemeralRng(g, "initiate");
  Initiation init = Initiate(params, own, rng);
  EphemeralState st{own.id, ToBytes(peer), init.x,
                    Precompute(params, own, init.x)};
  if (state_file.empty()) state_file = out_file + ".state";
  WriteBytes(out_file, EncodeFlowWire(params.group,
                                      {Role::kInitiator, own.id, init.msg.r,
                                       std::nullopt}));
  WriteFile(state_file,
            Armor({"ephemeral", {}, EncodeEphemeral(params.group, st)}));
  Emit(out, json{{"role", "initiate"},
                 {"flow", out_file},
                 {"state", state_file},
                 {"r", HexEncode(EncodePoint(params.group, init.msg.r))}});
  return kExitOk;
}

FlowWire ReadFlow(const SystemParams& params, const std::string& path,
                  Role expected_role, const std::string& peer) {
  std::string raw = ReadFile(path);
  FlowWire flow = DecodeFlowWire(
      params.group,
      ByteView(reinterpret_cast<const uint8_t*>(raw.data()), raw.size()));
  IDAK_ENFORCE(flow.role == expected_role, ErrorCode::kInvalidFlow,
               "unexpected role byte");
  IDAK_ENFORCE(flow.sender_id == ToBytes(peer), ErrorCode::kInvalidFlow,
               "flow sender does not match --peer");
  return flow;
}

int CmdRespond(const GlobalFlags& g, const std::string& key_file,
               const std::string& peer, const std::string& in_file,
               const std::string& out_file, const std::string& key_out,
               bool pfs, std::ostream& out) {
  if (peer.empty()) throw UsageError("--peer must be nonempty");
  SystemParams params = LoadParams(g);
  DeriveStrategy strategy = StrategyFlag(g);
  IdentityKey own = LoadIdentity(params, key_file);
  FlowWire flow_a = ReadFlow(params, in_file, Role::kInitiator, peer);
  FlowMessage msg_a{flow_a.r};
  Bytes peer_id = ToBytes(peer);

  Drbg rng = EphemeralRng(g, "respond");
  Response resp = pfs ? PfsRespond(params, own, peer_id, msg_a, rng)
                      : Respond(params, own, peer_id, msg_a, rng);
  Derivation d = Derive(params, own, resp.y, resp.msg, peer_id, msg_a,
                        Role::kResponder, strategy);
  SessionKey key =
      pfs ? PfsSessionKey(params, d.secret,
                          ScalarExp(params.group, msg_a.r, resp.y))
          : DeriveSessionKey(params, d.secret, peer_id, own.id, msg_a.r,
                             resp.msg.r);

  FlowWire flow_b{Role::kResponder, own.id, resp.msg.r, std::nullopt};
  if (pfs) flow_b.extra = resp.extra;
  WriteBytes(out_file, EncodeFlowWire(params.group, flow_b));
  WriteFile(key_out, SessionKeyFile(key, pfs));
  Emit(out, json{{"role", "respond"},
                 {"strategy", StrategyName(strategy)},
                 {"pi", PiVariantName(params.pi_variant)},
                 {"pfs", pfs},
                 {"op_counts", CountsJson(d.counts)},
                 {"flow", out_file},
                 {"session_key", key_out}});
  return kExitOk;
}

int CmdFinalize(const GlobalFlags& g, const std::string& key_file,
                const std::string& peer, const std::string& in_file,
                const std::string& state_file, const std::string& key_out,
                bool pfs, std::ostream& out) {
  if (peer.empty()) throw UsageError("--peer must be nonempty");
  SystemParams params = LoadParams(g);
  DeriveStrategy strategy = StrategyFlag(g);
  IdentityKey own = LoadIdentity(params, key_file);
  EphemeralState st = DecodeEphemeral(
      params.group, Dearmor(ReadFile(state_file), "ephemeral").payload);
  IDAK_ENFORCE(st.own_id == own.id && st.peer_id == ToBytes(peer),
               ErrorCode::kDecode, "state file belongs to another session");
  FlowWire flow_b = ReadFlow(params, in_file, Role::kResponder, peer);
  FlowMessage msg_b{flow_b.r};
  Bytes peer_id = ToBytes(peer);

  if (pfs) {
    IDAK_ENFORCE(flow_b.extra.has_value(), ErrorCode::kInvalidFlow,
                 "PFS flow lacks the extra point");
    IDAK_ENFORCE(VerifyPfsExtra(params, own.id, peer_id, msg_b, *flow_b.extra),
                 ErrorCode::kRejectedPoint, "extra point fails pairing check");
  }
  FlowMessage own_msg{st.pre.r};
  Derivation d = Derive(params, own, st.x, own_msg, peer_id, msg_b,
                        Role::kInitiator, strategy, &st.pre);
  SessionKey key =
      pfs ? PfsSessionKey(params, d.secret,
                          ScalarExp(params.group, *flow_b.extra, st.x))
          : DeriveSessionKey(params, d.secret, own.id, peer_id, own_msg.r,
                             msg_b.r);
  WriteFile(key_out, SessionKeyFile(key, pfs));
  Emit(out, json{{"role", "finalize"},
                 {"strategy", StrategyName(strategy)},
                 {"pi", PiVariantName(params.pi_variant)},
                 {"pfs", pfs},
                 {"op_counts", CountsJson(d.counts)},
                 {"session_key", key_out}});
  return kExitOk;
}

int CmdBench(const GlobalFlags& g, int trials, std::ostream& out,
             std::ostream& err) {
  if (trials < 1) throw UsageError("--trials must be >= 1");
  SystemParams params = LoadParams(g);
  Drbg rng(Sha256({ToBytes("idak-bench"), SeedBytes(g)}));
  MasterSecret msk{RandomScalar(params.group, rng)};
  IdentityKey alice = Extract(params, msk, "alice");
  IdentityKey bob = Extract(params, msk, "bob");

  out << "strategy\tpairing\texp_g\tmul_g\texp_gt\tmedian_us\n";
  bool all_match = true;
  for (const DeriveStrategy& s : kAllStrategies) {
    std::vector<double> micros;
    std::optional<OpCounts> counts;
    bool stable = true;
    while (static_cast<int>(micros.size()) < trials) {
      Initiation a = Initiate(params, alice, rng);
      Response b = Respond(params, bob, alice.id, a.msg, rng);
      Precomputation pre = Precompute(params, alice, a.x);
      auto start = std::chrono::steady_clock::now();
      Derivation d;
      try {
        d = Derive(params, alice, a.x, a.msg, bob.id, b.msg,
                   Role::kInitiator, s, &pre);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::kDegenerateExponent) continue;
        throw;
      }
      auto stop = std::chrono::steady_clock::now();
      micros.push_back(
          std::chrono::duration<double, std::micro>(stop - start).count());
      if (counts && !(*counts == d.counts)) stable = false;
      counts = d.counts;
    }
    std::nth_element(micros.begin(), micros.begin() + micros.size() / 2,
                     micros.end());
    double median = micros[micros.size() / 2];
    const OpCounts& c = *counts;
    out << StrategyName(s) << "\t" << c.pairings << "\t"
        << FormatHalves(c.exp_g_halves) << "\t" << c.mul_g << "\t"
        << c.exp_gt << "\t" << median << "\n";
    if (!stable || !(c == ReferenceCost(s))) {
      all_match = false;
      err << "cost mismatch for " << StrategyName(s) << "\n";
    }
  }
  if (!all_match) throw AssertionFailure("operation counts differ from the cost table");
  return kExitOk;
}

int CmdScenario(const GlobalFlags& g, const std::string& file,
                std::ostream& out, std::ostream& err) {
  std::ifstream in(file);
  if (!in) throw IoError("cannot read " + file);
  ScenarioOptions options;
  if (!g.mode.empty()) {
    try {
      options.mode_override = ParseSecurityMode(g.mode);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  Bytes seed = g.seed.empty() ? ToBytes("idak-scenario") : ToBytes(g.seed);
  ScenarioResult result = RunScenario(in, seed, options);
  out << (g.quiet ? result.log.dump() : result.log.dump(2)) << "\n";
  if (!result.passed) {
    for (const auto& f : result.failures) err << file << ": " << f << "\n";
    throw AssertionFailure("scenario assertions failed");
  }
  return kExitOk;
}

int CmdReduce(const GlobalFlags& g, double delta, int n, int trials,
              int k_bits, std::ostream& out) {
  if (delta < 0 || delta > 1) throw UsageError("--delta must be in [0, 1]");
  if (n < 1) throw UsageError("--n must be >= 1");
  if (trials < 1) throw UsageError("--trials must be >= 1");
  if (k_bits < kMinKBits || k_bits > 32) {
    throw UsageError("--k-bits must be in [3, 32] for the mock oracle");
  }
  Bytes seed = SeedBytes(g);
  SystemParams params = MakeSystemParams(InstanceGenerate(k_bits, seed));
  Drbg rng(Sha256({ToBytes("idak-reduce"), seed}));
  ReductionReport r =
      RunReductionExperiment(params.group, params.g, delta, n, trials, rng);
  Emit(out, json{{"delta", r.delta},
                 {"n", r.n},
                 {"trials", r.trials},
                 {"successes", r.successes},
                 {"success_rate", r.success_rate},
                 {"params",
                  {{"p", params.group.p.get_str()},
                   {"q", params.group.q.get_str()},
                   {"h", params.group.h.get_str()}}}});
  return kExitOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"IDAK identity-based authenticated key agreement toolkit",
               "idak"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags g;
  app.add_option("--params", g.params_file, "Params key file");
  app.add_option("--seed", g.seed, "Deterministic seed string");
  app.add_option("--pi", g.pi, "hash-half | xor-half | first-only");
  app.add_option("--strategy", g.strategy, "{c1|c2}-{pre|nopre}");
  app.add_option("--mode", g.mode, "br | wpfsbr");
  app.add_flag("--quiet", g.quiet, "Suppress banners and verbose output");

  int k_bits = 0;
  std::string out_dir = ".";
  auto* setup = app.add_subcommand("setup", "Generate params and master key");
  setup->add_option("--k-bits", k_bits, "Bit length of q")->required();
  setup->add_option("--out-dir", out_dir, "Output directory");

  std::string master_file, id, key_out_file;
  auto* extract = app.add_subcommand("extract", "Issue an identity key");
  extract->add_option("--master", master_file)->required();
  extract->add_option("--id", id)->required();
  extract->add_option("--out", key_out_file)->required();

  std::string key_file;
  auto* verify = app.add_subcommand("verify-key",
                                    "Check e(d_id, g) == e(g_id, g^alpha)");
  verify->add_option("--master", master_file)->required();
  verify->add_option("--key", key_file)->required();

  std::string peer, in_file, flow_out, state_file, session_out;
  bool pfs = false;
  auto* initiate = app.add_subcommand("initiate", "Write the first flow");
  initiate->add_option("--key", key_file)->required();
  initiate->add_option("--peer", peer)->required();
  initiate->add_option("--out", flow_out)->required();
  initiate->add_option("--state", state_file, "Defaults to <out>.state");

  auto* respond = app.add_subcommand("respond", "Answer a first flow");
  respond->add_option("--key", key_file)->required();
  respond->add_option("--peer", peer)->required();
  respond->add_option("--in", in_file)->required();
  respond->add_option("--out", flow_out)->required();
  respond->add_option("--session-key", session_out)->required();
  respond->add_flag("--pfs", pfs, "Send g_peer^y and use the PFS key");

  auto* finalize = app.add_subcommand("finalize", "Absorb the second flow");
  finalize->add_option("--key", key_file)->required();
  finalize->add_option("--peer", peer)->required();
  finalize->add_option("--in", in_file)->required();
  finalize->add_option("--state", state_file)->required();
  finalize->add_option("--session-key", session_out)->required();
  finalize->add_flag("--pfs", pfs, "Expect g_A^y and use the PFS key");

  int trials = 10;
  auto* bench = app.add_subcommand("bench", "Operation-count table");
  bench->add_option("--trials", trials);

  std::string scenario_file;
  auto* scenario = app.add_subcommand("scenario", "Run a BR scenario file");
  scenario->add_option("--file", scenario_file)->required();

  double delta = 1.0;
  int n = 1;
  int reduce_trials = 100;
  int reduce_k_bits = 16;
  auto* reduce = app.add_subcommand("reduce", "Self-reduction experiment");
  reduce->add_option("--delta", delta);
  reduce->add_option("--n", n);
  reduce->add_option("--trials", reduce_trials);
  reduce->add_option("--k-bits", reduce_k_bits);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    // Reject malformed global flags even for subcommands that ignore them.
    PiFlag(g);
    StrategyFlag(g);
    if (*setup) return CmdSetup(g, k_bits, out_dir, out, err);
    if (*extract) return CmdExtract(g, master_file, id, key_out_file, out);
    if (*verify) return CmdVerifyKey(g, master_file, key_file, out);
    if (*initiate) {
      return CmdInitiate(g, key_file, peer, flow_out, state_file, out);
    }
    if (*respond) {
      return CmdRespond(g, key_file, peer, in_file, flow_out, session_out,
                        pfs, out);
    }
    if (*finalize) {
      return CmdFinalize(g, key_file, peer, in_file, state_file, session_out,
                         pfs, out);
    }
    if (*bench) return CmdBench(g, trials, out, err);
    if (*scenario) return CmdScenario(g, scenario_file, out, err);
    if (*reduce) {
      return CmdReduce(g, delta, n, reduce_trials, reduce_k_bits, out);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const AssertionFailure& e) {
    err << "assertion failed: " << e.what() << "\n";
    return kExitAssertion;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kExitDataError;
  } catch (const IoError& e) {
    err << "io-error: " << e.what() << "\n";
    return kExitDataError;
  }
  return kExitUsage;
}

}  // namespace idak::cli
