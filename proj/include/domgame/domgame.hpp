#pragma once

#include "domgame/classical.hpp"
#include "domgame/corpus.hpp"
#include "domgame/game.hpp"
#include "domgame/graph.hpp"
#include "domgame/graph6.hpp"
#include "domgame/solver.hpp"
#include "domgame/verify.hpp"
#include "domgame/vertex_set.hpp"
