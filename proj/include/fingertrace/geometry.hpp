#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fingertrace/image.hpp"

namespace fingertrace {

enum class Axis { Columns, Rows };

/// Per-column (Columns) or per-row (Rows) foreground counts.
struct ProjectionHistogram {
    Axis axis = Axis::Columns;
    std::vector<int> counts;
};

/// Frame side where the forearm enters; fingers point at the opposite side.
enum class WristSide { Top, Bottom, Left, Right };

WristSide opposite(WristSide side);
std::string to_string(WristSide side);
std::optional<WristSide> wrist_side_from_string(const std::string& name);

/// Result of the 4-way boundary scan. contact counts are the number of
/// foreground pixels on the first occupied line met when scanning inward
/// from each side, indexed by WristSide cast to int {Top,Bottom,Left,Right}.
struct WristScan {
    WristSide wrist_side = WristSide::Bottom;
    std::array<int, 4> contacts{};
    bool ambiguous = false;

    int contact(WristSide side) const { return contacts[static_cast<int>(side)]; }
};

ProjectionHistogram project(const BinaryMask& mask, Axis axis);

/// Picks the side whose first-contact line carries the most foreground
/// pixels. Ties: Bottom > Top > Left > Right, flagged ambiguous.
/// Throws NoForeground on an empty mask.
WristScan detect_wrist_side(const BinaryMask& mask);

/// (y2-y1)/(x2-x1); throws VerticalSegment when x1 == x2.
double slope(double x1, double y1, double x2, double y2);

/// Scans the histogram from the wrist-side end toward the fingers, starting
/// at the first nonzero bin, and returns the first index whose forward
/// difference along the scan exceeds slope_threshold. The histogram axis
/// must be Rows for Top/Bottom wrists and Columns for Left/Right.
/// nullopt = no such inclination (caller falls back to a tight-box crop).
std::optional<int> find_wrist_cut(const ProjectionHistogram& hist, WristSide wrist_side,
                                  double slope_threshold);

/// Cuts the mask at cut_index on the wrist side; the other three bounds are
/// the first foreground lines seen from those sides. Returns the copied
/// sub-rectangle and its position. Throws EmptyCrop if no foreground remains.
std::pair<BinaryMask, CropRect> crop_hand(const BinaryMask& mask, WristSide wrist_side,
                                          int cut_index);

}  // namespace fingertrace
