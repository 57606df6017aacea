#pragma once

#include "errors.hpp"
#include "ordinal.hpp"
#include "graph.hpp"
#include "gallery.hpp"
#include "geodesy.hpp"
#include "transfinite.hpp"
#include "isometry.hpp"
#include "graph_spec.hpp"
#include "serialize.hpp"
#include "reproduce.hpp"
