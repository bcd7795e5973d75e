#!/usr/bin/env python3
"""Writes the bundled sample trigger-action dataset (deterministic)."""

import argparse
import csv
import random
import sys

# trigger category -> (weighted action categories, trigger events)
TRIGGERS = {
    "weather_station": (
        {"irrigation_system": 18, "window_blinds": 5, "smart_light": 2, "notification": 3},
        ["rain forecast", "temperature above 30C", "soil dry reported", "wind above 50 km/h"],
    ),
    "motion_sensor": (
        {"smart_light": 14, "alarm_siren": 5, "notification": 4, "robot_vacuum": 2},
        ["motion detected", "no motion for 10 minutes"],
    ),
    "door_sensor": (
        {"smart_lock": 9, "smart_light": 5, "notification": 6, "alarm_siren": 3},
        ["door opened", "door closed", "door left open"],
    ),
    "smoke_detector": (
        {"alarm_siren": 9, "notification": 6, "window_blinds": 2},
        ["smoke detected", "battery low"],
    ),
    "clock": (
        {"heating": 7, "smart_light": 6, "robot_vacuum": 5, "irrigation_system": 4, "smart_plug": 3},
        ["every day at 7:00", "sunset", "every Monday"],
    ),
    "smartphone": (
        {"smart_lock": 5, "heating": 5, "smart_light": 4, "air_conditioner": 4, "notification": 2},
        ["arrive home", "leave home", "battery below 15%"],
    ),
    "smart_thermostat": (
        {"heating": 8, "air_conditioner": 7, "window_blinds": 3, "notification": 2},
        ["temperature below 18C", "temperature above 26C", "humidity above 70%"],
    ),
    "window_sensor": (
        {"heating": 6, "air_conditioner": 4, "notification": 4},
        ["window opened", "window closed"],
    ),
    "light_sensor": (
        {"window_blinds": 7, "smart_light": 6},
        ["illuminance below 50 lux", "direct sunlight"],
    ),
    "washing_machine": (
        {"notification": 6, "smart_plug": 3},
        ["cycle finished", "door left closed"],
    ),
}

ACTION_EVENTS = {
    "irrigation_system": ["start watering zone 1", "skip next watering", "water for 15 minutes"],
    "window_blinds": ["close blinds", "open blinds halfway"],
    "smart_light": ["turn on", "turn off", "dim to 30%"],
    "notification": ["send a push message", "send an e-mail"],
    "alarm_siren": ["sound the siren", "flash and chime"],
    "robot_vacuum": ["start cleaning", "return to dock"],
    "smart_lock": ["lock the door", "unlock the door"],
    "heating": ["set to 21C", "switch to eco mode", "turn off"],
    "smart_plug": ["switch off", "switch on"],
    "air_conditioner": ["cool to 24C", "turn off"],
}


def rows(seed):
    rng = random.Random(seed)
    out = []
    for trigger, (actions, events) in TRIGGERS.items():
        for action, weight in actions.items():
            for _ in range(weight):
                t_event = rng.choice(events)
                a_event = rng.choice(ACTION_EVENTS[action])
                description = f'If {trigger.replace("_", " ")} reports "{t_event}", then {a_event}'
                if rng.random() < 0.3:
                    description += ", quietly"
                out.append([trigger, t_event, action, a_event, description])
    rng.shuffle(out)
    return out


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=20231017)
    parser.add_argument("--out", default="-")
    args = parser.parse_args()
    stream = sys.stdout if args.out == "-" else open(args.out, "w", newline="", encoding="utf-8")
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(["trigger_category", "trigger_event", "action_category", "action_event", "description"])
    writer.writerows(rows(args.seed))
    if stream is not sys.stdout:
        stream.close()


if __name__ == "__main__":
    main()
