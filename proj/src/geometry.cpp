#include "fingertrace/geometry.hpp"

#include <algorithm>

#include "fingertrace/parallel.hpp"

namespace fingertrace {

WristSide opposite(WristSide side) {
    switch (side) {
        case WristSide::Top: return WristSide::Bottom;
        case WristSide::Bottom: return WristSide::Top;
        case WristSide::Left: return WristSide::Right;
        case WristSide::Right: return WristSide::Left;
    }
    return WristSide::Bottom;
}

std::string to_string(WristSide side) {
    switch (side) {
        case WristSide::Top: return "top";
        case WristSide::Bottom: return "bottom";
        case WristSide::Left: return "left";
        case WristSide::Right: return "right";
    }
    return "bottom";
}

std::optional<WristSide> wrist_side_from_string(const std::string& name) {
    if (name == "top") return WristSide::Top;
    if (name == "bottom") return WristSide::Bottom;
    if (name == "left") return WristSide::Left;
    if (name == "right") return WristSide::Right;
    return std::nullopt;
}

ProjectionHistogram project(const BinaryMask& mask, Axis axis) {
    const int w = mask.width;
    const int h = mask.height;
    ProjectionHistogram hist;
    hist.axis = axis;
    if (axis == Axis::Rows) {
        hist.counts.assign(h, 0);
#pragma omp parallel for schedule(static)
        for (int y = 0; y < h; ++y) {
            const std::uint8_t* row = mask.bits.data() + static_cast<std::size_t>(y) * w;
            int s = 0;
            for (int x = 0; x < w; ++x) s += row[x];
            hist.counts[y] = s;
        }
    } else {
        hist.counts.assign(w, 0);
#pragma omp parallel for schedule(static)
        for (int x = 0; x < w; ++x) {
            int s = 0;
            for (int y = 0; y < h; ++y) s += mask.bits[static_cast<std::size_t>(y) * w + x];
            hist.counts[x] = s;
        }
    }
    return hist;
}

namespace {

int count_row(const BinaryMask& mask, int y) {
    int s = 0;
    for (int x = 0; x < mask.width; ++x) s += mask.at(x, y);
    return s;
}

int count_col(const BinaryMask& mask, int x) {
    int s = 0;
    for (int y = 0; y < mask.height; ++y) s += mask.at(x, y);
    return s;
}

}  // namespace

WristScan detect_wrist_side(const BinaryMask& mask) {
    WristScan scan;
    bool any = false;

    for (int y = 0; y < mask.height; ++y)
        if (int c = count_row(mask, y); c > 0) {
            scan.contacts[static_cast<int>(WristSide::Top)] = c;
            any = true;
            break;
        }
    for (int y = mask.height - 1; y >= 0; --y)
        if (int c = count_row(mask, y); c > 0) {
            scan.contacts[static_cast<int>(WristSide::Bottom)] = c;
            break;
        }
    for (int x = 0; x < mask.width; ++x)
        if (int c = count_col(mask, x); c > 0) {
            scan.contacts[static_cast<int>(WristSide::Left)] = c;
            break;
        }
    for (int x = mask.width - 1; x >= 0; --x)
        if (int c = count_col(mask, x); c > 0) {
            scan.contacts[static_cast<int>(WristSide::Right)] = c;
            break;
        }
    if (!any) throw NoForeground();

    // Tie-break priority: Bottom > Top > Left > Right.
    const WristSide order[4] = {WristSide::Bottom, WristSide::Top, WristSide::Left,
                                WristSide::Right};
    WristSide best = order[0];
    int ties = 0;
    for (WristSide side : order) {
        if (scan.contact(side) > scan.contact(best)) {
            best = side;
            ties = 1;
        } else if (scan.contact(side) == scan.contact(best)) {
            ++ties;
        }
    }
    scan.wrist_side = best;
    scan.ambiguous = ties > 1;
    return scan;
}

double slope(double x1, double y1, double x2, double y2) {
    if (x1 == x2) throw VerticalSegment();
    return (y2 - y1) / (x2 - x1);
}

std::optional<int> find_wrist_cut(const ProjectionHistogram& hist, WristSide wrist_side,
                                  double slope_threshold) {
    const bool rows = wrist_side == WristSide::Top || wrist_side == WristSide::Bottom;
    if ((rows && hist.axis != Axis::Rows) || (!rows && hist.axis != Axis::Columns))
        throw Error("find_wrist_cut: histogram axis does not match the wrist side");
    if (!(slope_threshold > 0)) throw Error("find_wrist_cut: slope_threshold must be > 0");

    const int n = static_cast<int>(hist.counts.size());
    const bool from_end = wrist_side == WristSide::Bottom || wrist_side == WristSide::Right;
    const int start = from_end ? n - 1 : 0;
    const int step = from_end ? -1 : 1;

    int i = start;
    while (i >= 0 && i < n && hist.counts[i] == 0) i += step;
    for (; i + step >= 0 && i + step < n; i += step) {
        const int rise = hist.counts[i + step] - hist.counts[i];
        if (static_cast<double>(rise) > slope_threshold) return i;
    }
    return std::nullopt;
}

std::pair<BinaryMask, CropRect> crop_hand(const BinaryMask& mask, WristSide wrist_side,
                                          int cut_index) {
    const int w = mask.width;
    const int h = mask.height;
    const int axis_len = (wrist_side == WristSide::Top || wrist_side == WristSide::Bottom) ? h : w;
    if (cut_index < 0 || cut_index >= axis_len)
        throw Error("crop_hand: cut_index outside the scan axis");

    int xmin = w, xmax = -1, ymin = h, ymax = -1;
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            if (mask.at(x, y)) {
                xmin = std::min(xmin, x);
                xmax = std::max(xmax, x);
                ymin = std::min(ymin, y);
                ymax = std::max(ymax, y);
            }
    if (xmax < 0) throw EmptyCrop();

    CropRect rect{xmin, xmax, ymin, ymax};
    switch (wrist_side) {
        case WristSide::Bottom:
            if (cut_index < ymin) throw EmptyCrop();
            rect.ymax = cut_index;
            break;
        case WristSide::Top:
            if (cut_index > ymax) throw EmptyCrop();
            rect.ymin = cut_index;
            break;
        case WristSide::Left:
            if (cut_index > xmax) throw EmptyCrop();
            rect.xmin = cut_index;
            break;
        case WristSide::Right:
            if (cut_index < xmin) throw EmptyCrop();
            rect.xmax = cut_index;
            break;
    }

    BinaryMask out(rect.width(), rect.height());
    for (int y = 0; y < rect.height(); ++y)
        for (int x = 0; x < rect.width(); ++x)
            out.set(x, y, mask.at(rect.xmin + x, rect.ymin + y));
    return {std::move(out), rect};
}

}  // namespace fingertrace
