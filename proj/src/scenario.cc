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

#include "idak/scenario.h"

#include <map>
#include <memory>

#include "idak/encoding.h"
#include "idak/error.h"

namespace idak {

namespace {

using nlohmann::json;

struct WorldConfig {
  int k_bits = 16;
  SecurityMode mode = SecurityMode::kBR;
  PiVariant pi = PiVariant::kHashHalf;
  DeriveStrategy strategy{2, true};
  std::vector<std::string> principals{"alice", "bob"};
};

class Runner {
 public:
  Runner(ByteView seed, const ScenarioOptions& options)
      : seed_(seed.begin(), seed.end()),
        options_(options),
        test_rng_(Sha256({ToBytes("idak-scenario-test"), seed})) {}

  void Line(size_t line_no, const json& q) {
    const std::string kind = q.value("q", "");
    json entry{{"line", line_no}, {"q", kind}};
    if (kind == "world") {
      IDAK_ENFORCE(world_ == nullptr, ErrorCode::kDecode,
                   "world must be the first query");
      Configure(q);
      entry["params"] = ParamsJson();
      log_.push_back(entry);
      return;
    }
    if (world_ == nullptr) Configure(json::object());

    if (kind == "assert") {
      Assert(line_no, q, entry);
      log_.push_back(entry);
      return;
    }

    std::string expect = q.value("expect", "ok");
    std::string outcome = "ok";
    try {
      Dispatch(kind, q, entry);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kDecode) throw;
      outcome = "error:" + std::string(ErrorName(e.code()));
      entry["error"] = e.what();
    }
    entry["outcome"] = outcome;
    if (outcome != expect) {
      Fail(line_no, kind + " expected " + expect + " got " + outcome);
      entry["failed"] = true;
    }
    log_.push_back(entry);
  }

  ScenarioResult Finish() {
    if (world_ == nullptr) Configure(json::object());
    ScenarioResult result;
    result.failures = failures_;
    result.passed = failures_.empty();
    result.log = json{{"params", ParamsJson()},
                      {"mode", SecurityModeName(world_->mode())},
                      {"queries", log_},
                      {"failures", failures_},
                      {"passed", result.passed}};
    return result;
  }

 private:
  void Configure(const json& q) {
    WorldConfig cfg;
    cfg.k_bits = q.value("k_bits", cfg.k_bits);
    try {
      if (q.contains("mode")) cfg.mode = ParseSecurityMode(q["mode"].get<std::string>());
      if (q.contains("pi")) cfg.pi = ParsePiVariant(q["pi"].get<std::string>());
      if (q.contains("strategy")) {
        cfg.strategy = ParseStrategy(q["strategy"].get<std::string>());
      }
    } catch (const std::invalid_argument& e) {
      throw Error(ErrorCode::kDecode, e.what());
    }
    if (q.contains("principals")) {
      cfg.principals = q["principals"].get<std::vector<std::string>>();
    }
    if (options_.mode_override) cfg.mode = *options_.mode_override;
    auto [params, msk] = Setup(cfg.k_bits, seed_, cfg.pi);
    world_ = std::make_unique<World>(std::move(params), std::move(msk),
                                     cfg.mode, seed_, cfg.strategy);
    for (const auto& p : cfg.principals) world_->AddPrincipal(p);
  }

  json ParamsJson() const {
    const GroupParams& g = world_->params().group;
    return json{{"p", g.p.get_str()}, {"q", g.q.get_str()},
                {"h", g.h.get_str()}};
  }

  void Fail(size_t line_no, const std::string& why) {
    failures_.push_back("line " + std::to_string(line_no) + ": " + why);
  }

  OracleRef Ref(const json& q, const char* field = "oracle") {
    IDAK_ENFORCE(q.contains(field), ErrorCode::kDecode,
                 std::string("missing field ") + field);
    std::string name = q[field].get<std::string>();
    auto it = names_.find(name);
    IDAK_ENFORCE(it != names_.end(), ErrorCode::kNoSuchOracle, name);
    return it->second;
  }

  std::optional<FlowMessage> Message(const json& msg) {
    if (msg.is_null()) return std::nullopt;
    std::string s = msg.get<std::string>();
    const GroupParams& group = world_->params().group;
    if (!s.empty() && s[0] == '@') {
      auto dot = s.rfind(".out");
      IDAK_ENFORCE(dot != std::string::npos, ErrorCode::kDecode,
                   "back-reference must end in .out: " + s);
      std::string name = s.substr(1, dot - 1);
      auto it = last_out_.find(name);
      IDAK_ENFORCE(it != last_out_.end(), ErrorCode::kDecode,
                   "no output recorded for " + name);
      return it->second;
    }
    Bytes raw = HexDecode(s);
    try {
      return FlowMessage{DecodePoint(group, raw)};
    } catch (const Error& e) {
      // Adversarial bytes are a flow error, not a scenario syntax error.
      throw Error(ErrorCode::kInvalidFlow, e.what());
    }
  }

  void Dispatch(const std::string& kind, const json& q, json& entry) {
    const GroupParams& group = world_->params().group;
    if (kind == "send") {
      std::string name = q.at("oracle").get<std::string>();
      if (!names_.contains(name)) {
        names_[name] = world_->NewOracle(q.at("i").get<std::string>(),
                                         q.at("j").get<std::string>());
      }
      OracleRef ref = names_[name];
      entry["oracle"] = ToString(ref);
      auto out = world_->Send(ref, Message(q.value("msg", json())));
      if (out) {
        last_out_[name] = *out;
        entry["out"] = HexEncode(EncodePoint(group, out->r));
      }
      const SessionOracle& o = world_->oracle(ref);
      entry["completed"] = o.completed;
      if (o.completed) entry["key"] = HexEncode(o.key->key);
    } else if (kind == "reveal") {
      OracleRef ref = Ref(q);
      entry["key"] = HexEncode(world_->Reveal(ref).key);
    } else if (kind == "corrupt") {
      GElem d = world_->Corrupt(q.at("principal").get<std::string>());
      entry["d_id"] = HexEncode(EncodePoint(group, d));
    } else if (kind == "extract") {
      GElem d = world_->Extract(q.at("id").get<std::string>());
      entry["d_id"] = HexEncode(EncodePoint(group, d));
    } else if (kind == "test") {
      OracleRef ref = Ref(q);
      int coin = q.value("coin", 1);
      entry["value"] = HexEncode(world_->Test(ref, coin, test_rng_).key);
    } else {
      throw Error(ErrorCode::kDecode, "unknown query: " + kind);
    }
  }

  void Assert(size_t line_no, const json& q, json& entry) {
    const std::string check = q.value("check", "");
    entry["check"] = check;
    bool ok = false;
    try {
      if (check == "keys_equal" || check == "keys_differ") {
        const auto& a = world_->oracle(Ref(q, "a"));
        const auto& b = world_->oracle(Ref(q, "b"));
        bool equal = a.key && b.key && *a.key == *b.key;
        ok = a.key && b.key && (check == "keys_equal" ? equal : !equal);
      } else if (check == "matching") {
        ok = world_->Matching(Ref(q, "a"), Ref(q, "b")) ==
             q.value("expect", true);
      } else if (check == "fresh") {
        ok = world_->Fresh(Ref(q)) == q.value("expect", true);
      } else if (check == "completed") {
        ok = world_->oracle(Ref(q)).completed == q.value("expect", true);
      } else if (check == "test_equals_key") {
        OracleRef ref = Ref(q);
        SessionKey v = world_->Test(ref, 1, test_rng_);
        const SessionOracle& o = world_->oracle(ref);
        ok = o.key && v == *o.key && !o.revealed;
      } else {
        throw Error(ErrorCode::kDecode, "unknown check: " + check);
      }
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kDecode) throw;
      entry["error"] = e.what();
      ok = false;
    }
    entry["ok"] = ok;
    if (!ok) Fail(line_no, "assert " + check + " failed");
  }

  Bytes seed_;
  ScenarioOptions options_;
  Drbg test_rng_;
  std::unique_ptr<World> world_;
  std::map<std::string, OracleRef> names_;
  std::map<std::string, FlowMessage> last_out_;
  json log_ = json::array();
  std::vector<std::string> failures_;
};

}  // namespace

ScenarioResult RunScenario(std::istream& in, ByteView seed,
                           const ScenarioOptions& options) {
  Runner runner(seed, options);
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    json q;
    try {
      q = json::parse(line);
    } catch (const json::exception& e) {
      throw Error(ErrorCode::kDecode,
                  "line " + std::to_string(line_no) + ": " + e.what());
    }
    try {
      runner.Line(line_no, q);
    } catch (const json::exception& e) {
      throw Error(ErrorCode::kDecode,
                  "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return runner.Finish();
}

}  // namespace idak
