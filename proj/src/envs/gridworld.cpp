#include "macrorl/envs/gridworld.hpp"

#include <deque>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>

#include "macrorl/core/errors.hpp"

namespace macrorl::envs {

namespace {
constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();
}

GridworldEnv::GridworldEnv(std::size_t width, std::size_t height, std::set<Cell> walls, Cell goal,
                           Cell start)
    : width_(width), height_(height), walls_(std::move(walls)), goal_(goal), start_(start), agent_(start) {
  if (width == 0 || height == 0) throw EnvironmentError("gridworld needs positive dimensions");
  auto inside = [&](Cell c) { return c.x < width_ && c.y < height_; };
  if (!inside(goal_) || !inside(start_)) throw EnvironmentError("gridworld start/goal outside the grid");
  for (const Cell& w : walls_) {
    if (!inside(w)) throw EnvironmentError("gridworld wall outside the grid");
  }
  if (is_wall(goal_)) throw EnvironmentError("gridworld goal is inside a wall");
  if (is_wall(start_)) throw EnvironmentError("gridworld start is inside a wall");
  if (start_ == goal_) throw EnvironmentError("gridworld start coincides with the goal");
  if (distances_from(start_)[id_of(goal_)] == kUnreached) {
    throw EnvironmentError("gridworld goal is unreachable from the start");
  }
}

GridworldEnv GridworldEnv::parse(std::istream& in) {
  std::vector<std::string> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    rows.push_back(line);
  }
  if (rows.empty()) throw EnvironmentError("gridworld layout is empty");
  const std::size_t width = rows.front().size();
  std::set<Cell> walls;
  std::optional<Cell> goal;
  std::optional<Cell> start;
  for (std::size_t y = 0; y < rows.size(); ++y) {
    if (rows[y].size() != width) {
      throw EnvironmentError("gridworld layout row " + std::to_string(y + 1) + " has a different width");
    }
    for (std::size_t x = 0; x < width; ++x) {
      switch (rows[y][x]) {
        case '#': walls.insert({x, y}); break;
        case '.': break;
        case 'S':
          if (start) throw EnvironmentError("gridworld layout has more than one S");
          start = Cell{x, y};
          break;
        case 'G':
          if (goal) throw EnvironmentError("gridworld layout has more than one G");
          goal = Cell{x, y};
          break;
        default:
          throw EnvironmentError("gridworld layout has unknown character '" + std::string(1, rows[y][x]) +
                                 "' at row " + std::to_string(y + 1) + ", column " + std::to_string(x + 1));
      }
    }
  }
  if (!goal) throw EnvironmentError("gridworld layout has no G");
  return GridworldEnv(width, rows.size(), std::move(walls), *goal, start.value_or(Cell{0, 0}));
}

GridworldEnv GridworldEnv::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw EnvironmentError("cannot open gridworld layout " + path);
  return parse(in);
}

std::vector<StateId> GridworldEnv::states() const {
  std::vector<StateId> out;
  for (std::size_t y = 0; y < height_; ++y) {
    for (std::size_t x = 0; x < width_; ++x) {
      if (!is_wall({x, y})) out.push_back(id_of({x, y}));
    }
  }
  return out;
}

Cell GridworldEnv::move(Cell c, ActionId a) const {
  Cell n = c;
  switch (a) {
    case kUp: if (c.y > 0) --n.y; break;
    case kDown: if (c.y + 1 < height_) ++n.y; break;
    case kLeft: if (c.x > 0) --n.x; break;
    case kRight: if (c.x + 1 < width_) ++n.x; break;
    default: throw EnvironmentError("gridworld action out of range");
  }
  return is_wall(n) ? c : n;
}

std::vector<std::size_t> GridworldEnv::distances_from(Cell origin) const {
  std::vector<std::size_t> dist(width_ * height_, kUnreached);
  std::deque<Cell> frontier{origin};
  dist[id_of(origin)] = 0;
  while (!frontier.empty()) {
    const Cell c = frontier.front();
    frontier.pop_front();
    for (ActionId a = 0; a < 4; ++a) {
      const Cell n = move(c, a);
      if (dist[id_of(n)] != kUnreached) continue;
      dist[id_of(n)] = dist[id_of(c)] + 1;
      frontier.push_back(n);
    }
  }
  return dist;
}

std::size_t GridworldEnv::shortest_path_length() const { return distances_from(start_)[id_of(goal_)]; }

TransitionTable GridworldEnv::transition_table() const {
  TransitionTable table;
  for (StateId s : states()) {
    if (is_terminal_state(s)) continue;
    for (ActionId a = 0; a < 4; ++a) {
      const Cell n = move(cell_of(s), a);
      const bool terminal = n == goal_;
      table[{s, a}] = {id_of(n), terminal ? 1.0 : 0.0, terminal};
    }
  }
  return table;
}

StateId GridworldEnv::on_reset(std::uint64_t) {
  agent_ = start_;
  return id_of(agent_);
}

Environment::Advance GridworldEnv::on_step(ActionId action) {
  agent_ = move(agent_, action);
  const bool terminal = agent_ == goal_;
  return {id_of(agent_), terminal ? 1.0 : 0.0, terminal};
}

void GridworldEnv::fill_features(std::vector<double>& out) const { out[id_of(agent_)] = 1.0; }

void GridworldEnv::place(StateId s) {
  const Cell c = cell_of(s);
  if (s >= state_count() || is_wall(c)) throw EnvironmentError("gridworld cannot place agent there");
  agent_ = c;
}

}  // namespace macrorl::envs
