#pragma once

#include <optional>
#include <string>
#include <vector>

#include "casim/geometry.hpp"

namespace casim::cas {

// One altitude band of the tau-threshold surrogate logic. ra_enabled is
// false for the TA-only regime below the CAS minimum altitude.
struct SensitivityLevel {
    int level = 0;
    double floor_ft = 0.0;
    double ceiling_ft = 0.0;
    double ta_tau_s = 0.0;
    double ra_tau_s = 0.0;
    bool ra_enabled = true;
};

struct SensitivityTable {
    std::vector<SensitivityLevel> levels;
    double ra_vertical_thresh_ft = 600.0;
    double ta_vertical_thresh_ft = 850.0;
    double proximate_range_nm = 6.0;
    double proximate_alt_ft = 1200.0;
    double ra_rate_fps = 25.0;  // 1500 ft/min
    int ra_min_hold_steps = 5;
    int ra_clear_steps = 3;

    static SensitivityTable defaults();
    const SensitivityLevel& level_for(double own_alt_ft) const;
};

enum class AdvisoryKind { None, TA, RA };
enum class Sense { Climb, Descend, LevelOff };

struct Advisory {
    AdvisoryKind kind = AdvisoryKind::None;
    Sense sense = Sense::Climb;
    double target_vrate_fps = 0.0;  // zero iff sense is LevelOff
};

struct TrackSample {
    int step = 0;  // strictly increasing
    double slant_ft = 0.0;
    double bearing_deg = 0.0;
    double reported_alt_ft = 0.0;
};

// Surveillance history of one intruder; rates are derived from the two
// most recent samples and are zero with fewer than two.
class IntruderTrack {
  public:
    void add(const TrackSample& sample);
    bool empty() const { return samples_.empty(); }
    size_t size() const { return samples_.size(); }
    const TrackSample& latest() const { return samples_.back(); }
    double rdot_kt() const;
    double vrate_fps() const;
    const std::vector<TrackSample>& samples() const { return samples_; }

  private:
    std::vector<TrackSample> samples_;
};

enum class Phase { Passive, Active };

struct OwnState {
    double x_ft = 0.0;
    double y_ft = 0.0;
    double alt_ft = 0.0;
    double vrate_fps = 0.0;
    bool airborne = true;
};

struct StepOutput {
    Advisory advisory;
    bool proximate = false;
};

Phase surveillance_phase(const OwnState& own, const IntruderTrack& track);

struct Assessment {
    AdvisoryKind kind = AdvisoryKind::None;
    bool proximate = false;
};

// Per-track threat assessment against one sensitivity level. Vertical
// threat uses linear extrapolation of both aircraft to the CPA time.
Assessment assess(const OwnState& own, const IntruderTrack& track,
                  const SensitivityLevel& sl, const SensitivityTable& table);

// Sense choice maximizing predicted vertical separation at CPA with the
// ownship maneuvering at the RA rate; LevelOff when the current rates
// already diverge and holding level keeps adequate separation.
Advisory select_sense(const OwnState& own, const IntruderTrack& track,
                      const SensitivityTable& table);

// Per-run threat logic state: advisory latch and hysteresis counters.
class Cas {
  public:
    explicit Cas(SensitivityTable table = SensitivityTable::defaults())
        : table_(std::move(table)) {}

    // 1 Hz cadence. tracks holds the intruders that received a
    // surveillance update this step.
    StepOutput step(const OwnState& own,
                    const std::vector<const IntruderTrack*>& tracks);

    const SensitivityTable& table() const { return table_; }

  private:
    SensitivityTable table_;
    bool ra_active_ = false;
    int ra_age_ = 0;
    int clear_count_ = 0;
    Advisory latched_;
};

}  // namespace casim::cas
