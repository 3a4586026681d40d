#pragma once

#include <map>
#include <string>
#include <vector>

#include "femtonc/model.hpp"
#include "femtonc/solvers.hpp"

namespace femtonc {

enum class FcSolver { Exact, Gvs };
enum class MbsColoring { Exact, Ggc };
enum class FcMode { OncBroadcast, DualGraphOnly, SeparateGraph, BroadcastOnly };

struct SchedulerPolicy {
  FcSolver fc_solver = FcSolver::Gvs;
  MbsColoring mbs_coloring = MbsColoring::Ggc;
  FcMode fc_mode = FcMode::OncBroadcast;
  bool optimal = false;  // brute-force optimal_offload instead of the scheme

  int mis_cap = kDefaultMisCap;
  int chromatic_cap = kDefaultChromaticCap;
  int optimal_max_clients = 12;
  int optimal_max_fcs = 3;
  GvsOptions gvs;

  // "gvs-ggc", "exact-exact:separate-graph", "optimal", ...
  std::string name() const;
};

// Parses the name() format. Throws InvalidInput.
SchedulerPolicy parse_policy(const std::string& name);

const char* to_string(FcMode m);

struct Transmission {
  FcId fc = -1;  // -1 for the MBS
  std::vector<FileId> files;  // XORed together, ascending
  std::vector<ClientId> served;
};

struct FcPlan {
  std::vector<Transmission> transmissions;  // at most one per FC, FC order
  std::vector<ClientId> served;             // ascending
};

struct ScheduleResult {
  int n_fc = 0;
  int n_mbs = 0;
  int chosen_scheme = 0;  // 1..4, 0 for optimal or forced plans
  std::vector<Transmission> fc_transmissions;
  std::vector<Transmission> mbs_transmissions;

  // Diagnostics for the sweep engine.
  int n_fc_broadcast = 0;
  int n_fc_onc = 0;
  int residual_size = 0;     // U - n_fc of the ONC plan
  int residual_colors = -1;  // colouring size of that residual per policy
};

// Each FC in id order broadcasts the cached file with the most covered,
// not yet claimed requesters (ties to the smaller file). FCs with nothing
// useful stay silent.
FcPlan fc_broadcast_plan(const Scenario& s);

// Maximum independent set of the dual conflict graph split by FC.
FcPlan fc_onc_plan(const Scenario& s, const SchedulerPolicy& p);

// Per-FC conflict graphs solved independently; clients claimed by several
// FCs go to the lowest FC id.
FcPlan fc_separate_plan(const Scenario& s, const SchedulerPolicy& p);

ScheduleResult onc_broadcast_schedule(const Scenario& s, const SchedulerPolicy& p);
ScheduleResult separate_graph_schedule(const Scenario& s, const SchedulerPolicy& p);

// Dispatches on p.optimal / p.fc_mode.
ScheduleResult run_policy(const Scenario& s, const SchedulerPolicy& p);

ScheduleResult optimal_schedule(const Scenario& s, const SchedulerPolicy& p);

// FCs send the given XOR file sets; FCs absent from the map stay silent.
// Served clients are the covered, unclaimed ones able to decode.
ScheduleResult schedule_with_fc_transmissions(const Scenario& s,
                                              const std::map<FcId, std::vector<FileId>>& forced,
                                              const SchedulerPolicy& p);

int baseline_no_fc(const Scenario& s, const SchedulerPolicy& p);

// MBS transmissions for the given residual clients: colouring per policy or
// one plain transmission per wanted file, whichever is smaller.
std::vector<Transmission> mbs_plan(const Scenario& s, const std::vector<ClientId>& residual,
                                   const SchedulerPolicy& p);

// Empty when every client decodes its file from exactly one transmission,
// otherwise a description of the first violation.
std::string check_schedule(const Scenario& s, const ScheduleResult& r);

// `fc 1 xor f1,f6 serves u1,u2` lines with 1-based labels, then totals.
std::string format_report(const ScheduleResult& r);

}  // namespace femtonc
