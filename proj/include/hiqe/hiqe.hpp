#pragma once

#include "hiqe/dynamics.hpp"
#include "hiqe/error.hpp"
#include "hiqe/extraction.hpp"
#include "hiqe/io.hpp"
#include "hiqe/linalg.hpp"
#include "hiqe/protocols.hpp"
#include "hiqe/schedule.hpp"
#include "hiqe/synthesis.hpp"
