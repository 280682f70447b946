#pragma once

#include "aubench/dataset.hpp"
#include "aubench/error.hpp"

namespace aubench {

enum class WindowRule { onset_apex, apex_offset_fallback, beginning_window };

inline const char* to_string(WindowRule r) {
  switch (r) {
    case WindowRule::onset_apex: return "onset-apex";
    case WindowRule::apex_offset_fallback: return "apex-offset-fallback";
    case WindowRule::beginning_window: return "beginning-window";
  }
  return "unknown";
}

// Half-open frame range [start, end).
struct FrameWindow {
  int start = 0;
  int end = 0;
  WindowRule rule = WindowRule::onset_apex;
};

// Default rule covers onset..apex. When onset == apex (frame-drop quirk) the
// window falls back to apex..offset. Long clips in video-input mode sample
// only the beginning frames, [onset, 2*apex - onset).
inline FrameWindow select_window(const Sample& s, bool video_mode = false) {
  validate(s);
  if (s.onset == s.apex && s.apex == s.offset)
    throw DataError("select_window: degenerate clip '" + s.sample_id +
                    "' (onset == apex == offset)");
  if (video_mode && s.onset < s.apex)
    return {s.onset, 2 * s.apex - s.onset, WindowRule::beginning_window};
  if (s.onset == s.apex)
    return {s.apex, s.offset + 1, WindowRule::apex_offset_fallback};
  return {s.onset, s.apex + 1, WindowRule::onset_apex};
}

}  // namespace aubench
