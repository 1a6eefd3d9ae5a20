"""Grid-world mazes as absorbing random walks."""

from asua.maze.parser import (
    Cell,
    MazeGrid,
    maze_records,
    maze_to_graph,
    parse_maze,
    render_grid,
)

__all__ = ["Cell", "MazeGrid", "maze_records", "maze_to_graph", "parse_maze", "render_grid"]
