import json
import logging
import sqlite3
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, List, Optional


class RunLedger:
    """SQLite record of experiment runs and their lifecycle events"""

    def __init__(self, db_path: str = "./results/ledger.db"):
        self.db_path = db_path
        self.logger = logging.getLogger("run_ledger")
        Path(db_path).parent.mkdir(parents=True, exist_ok=True)
        self._init_database()

    def _init_database(self):
        """Initialize SQLite database schema"""
        conn = sqlite3.connect(self.db_path)
        cursor = conn.cursor()

        cursor.execute('''
            CREATE TABLE IF NOT EXISTS runs (
                id INTEGER PRIMARY KEY AUTOINCREMENT,
                timestamp TEXT NOT NULL,
                experiment TEXT NOT NULL,
                seed INTEGER,
                config_digest TEXT,
                output_path TEXT,
                summary TEXT,
                status TEXT DEFAULT 'completed'
            )
        ''')

        cursor.execute('''
            CREATE TABLE IF NOT EXISTS events (
                id INTEGER PRIMARY KEY AUTOINCREMENT,
                timestamp TEXT NOT NULL,
                component TEXT,
                action TEXT,
                details TEXT
            )
        ''')

        conn.commit()
        conn.close()

    def store_run(self, run: Dict[str, Any]) -> int:
        """Store a finished run and return its database ID"""
        conn = sqlite3.connect(self.db_path)
        cursor = conn.cursor()

        cursor.execute('''
            INSERT INTO runs (timestamp, experiment, seed, config_digest, output_path, summary, status)
            VALUES (?, ?, ?, ?, ?, ?, ?)
        ''', (
            run.get("timestamp", datetime.now().isoformat()),
            run["experiment"],
            run.get("seed"),
            run.get("config_digest", ""),
            run.get("output_path", ""),
            json.dumps(run.get("summary", {}), default=str),
            run.get("status", "completed"),
        ))
        run_id = cursor.lastrowid
        conn.commit()
        conn.close()
        self.logger.debug(f"Stored run {run_id}", extra={"experiment": run["experiment"]})
        return run_id

    def log_event(self, component: str, action: str, details: Dict[str, Any]):
        """Log component events for observability"""
        conn = sqlite3.connect(self.db_path)
        cursor = conn.cursor()

        cursor.execute('''
            INSERT INTO events (timestamp, component, action, details)
            VALUES (?, ?, ?, ?)
        ''', (
            datetime.now().isoformat(),
            component,
            action,
            json.dumps(details, default=str),
        ))

        conn.commit()
        conn.close()

    def get_recent_runs(self, limit: int = 10, experiment: Optional[str] = None) -> List[Dict]:
        conn = sqlite3.connect(self.db_path)
        cursor = conn.cursor()

        query = 'SELECT id, timestamp, experiment, seed, config_digest, output_path, summary, status FROM runs'
        params: tuple = ()
        if experiment is not None:
            query += ' WHERE experiment = ?'
            params = (experiment,)
        query += ' ORDER BY id DESC LIMIT ?'
        cursor.execute(query, params + (limit,))

        runs = [self._row_to_run(row) for row in cursor.fetchall()]
        conn.close()
        return runs

    def get_run(self, run_id: int) -> Optional[Dict[str, Any]]:
        conn = sqlite3.connect(self.db_path)
        cursor = conn.cursor()
        cursor.execute(
            'SELECT id, timestamp, experiment, seed, config_digest, output_path, summary, status '
            'FROM runs WHERE id = ?',
            (run_id,)
        )
        row = cursor.fetchone()
        conn.close()
        return self._row_to_run(row) if row else None

    def get_events(self, component: Optional[str] = None) -> List[Dict[str, Any]]:
        conn = sqlite3.connect(self.db_path)
        cursor = conn.cursor()
        if component is None:
            cursor.execute('SELECT timestamp, component, action, details FROM events ORDER BY id')
        else:
            cursor.execute(
                'SELECT timestamp, component, action, details FROM events WHERE component = ? ORDER BY id',
                (component,)
            )
        events = [
            {"timestamp": ts, "component": comp, "action": action, "details": json.loads(details)}
            for ts, comp, action, details in cursor.fetchall()
        ]
        conn.close()
        return events

    @staticmethod
    def _row_to_run(row) -> Dict[str, Any]:
        try:
            summary = json.loads(row[6]) if row[6] else {}
        except json.JSONDecodeError:
            summary = {}
        return {
            "id": row[0],
            "timestamp": row[1],
            "experiment": row[2],
            "seed": row[3],
            "config_digest": row[4],
            "output_path": row[5],
            "summary": summary,
            "status": row[7],
        }
